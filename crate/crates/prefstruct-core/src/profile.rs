use crate::{is_permutation, ProfileError, RankIndex, VoterOrdering};

/// A list of `n` strict rankings over the alternatives `0..m`.
///
/// Votes are stored row-major in one flat buffer; `vote(i)` lists voter `i`'s
/// alternatives from most to least preferred. Duplicate votes are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Profile {
    m: usize,
    n: usize,
    votes: Vec<usize>,
    names: Option<Vec<String>>,
}

impl Profile {
    /// Builds a profile from per-voter rankings.
    pub fn new(votes: Vec<Vec<usize>>) -> Result<Self, ProfileError> {
        let m = votes.first().map(Vec::len).unwrap_or(0);
        let flat: Vec<usize> = votes.iter().flatten().copied().collect();
        if votes.iter().any(|v| v.len() != m) {
            let voter = votes.iter().position(|v| v.len() != m).unwrap_or(0);
            return Err(ProfileError::NotPermutation { voter, m });
        }
        Self::from_flat(m, flat)
    }

    /// Builds a profile from a row-major buffer of `n * m` ids.
    pub fn from_flat(m: usize, votes: Vec<usize>) -> Result<Self, ProfileError> {
        if m == 0 || votes.is_empty() || !votes.len().is_multiple_of(m) {
            return Err(ProfileError::Empty);
        }
        let n = votes.len() / m;
        for (voter, row) in votes.chunks_exact(m).enumerate() {
            if !is_permutation(row, m) {
                return Err(ProfileError::NotPermutation { voter, m });
            }
        }
        Ok(Profile { m, n, votes, names: None })
    }

    /// Builds a profile from rows of single-character labels, e.g.
    /// `["abc", "bca", "cab"]`. Labels are sorted to assign ids, so `a` is 0.
    pub fn from_letter_rows(rows: &[&str]) -> Result<Self, ProfileError> {
        let first: Vec<char> = rows.first().ok_or(ProfileError::Empty)?.chars().collect();
        let mut labels = first.clone();
        labels.sort_unstable();
        let mut votes = Vec::with_capacity(rows.len());
        for (voter, row) in rows.iter().enumerate() {
            let mut vote = Vec::with_capacity(labels.len());
            for ch in row.chars() {
                let id = labels
                    .binary_search(&ch)
                    .map_err(|_| ProfileError::NotPermutation { voter, m: labels.len() })?;
                vote.push(id);
            }
            votes.push(vote);
        }
        let names = labels.iter().map(|c| c.to_string()).collect();
        Self::new(votes)?.with_names(names)
    }

    /// Attaches display names to the alternatives.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, ProfileError> {
        if names.len() != self.m {
            return Err(ProfileError::NameCount { expected: self.m, got: names.len() });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Voter `i`'s ranking, most preferred first.
    pub fn vote(&self, i: usize) -> &[usize] {
        &self.votes[i * self.m..(i + 1) * self.m]
    }

    pub fn votes(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.votes.chunks_exact(self.m)
    }

    /// Voter `i`'s most preferred alternative.
    pub fn top(&self, i: usize) -> usize {
        self.votes[i * self.m]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of an alternative; falls back to its numeric id.
    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn rank_index(&self) -> RankIndex {
        RankIndex::new(self)
    }

    /// Induced profile on `keep`. New id `j` corresponds to old id `mapping[j]`;
    /// the kept alternatives retain their relative id order.
    pub fn restrict_alternatives(&self, keep: &[usize]) -> Result<(Profile, Vec<usize>), ProfileError> {
        let mapping = sorted_selection(keep, self.m)?;
        let mut new_id = vec![usize::MAX; self.m];
        for (j, &a) in mapping.iter().enumerate() {
            new_id[a] = j;
        }
        let mut votes = Vec::with_capacity(self.n * mapping.len());
        for vote in self.votes() {
            votes.extend(vote.iter().filter(|&&a| new_id[a] != usize::MAX).map(|&a| new_id[a]));
        }
        let names = self
            .names
            .as_ref()
            .map(|names| mapping.iter().map(|&a| names[a].clone()).collect());
        let profile = Profile { m: mapping.len(), n: self.n, votes, names };
        Ok((profile, mapping))
    }

    /// Sub-profile of the listed voters, in the listed order.
    pub fn restrict_voters(&self, keep: &[usize]) -> Result<Profile, ProfileError> {
        if keep.is_empty() {
            return Err(ProfileError::EmptySelection);
        }
        let mut votes = Vec::with_capacity(keep.len() * self.m);
        for &i in keep {
            if i >= self.n {
                return Err(ProfileError::OutOfRange { id: i, len: self.n });
            }
            votes.extend_from_slice(self.vote(i));
        }
        Ok(Profile { m: self.m, n: keep.len(), votes, names: self.names.clone() })
    }

    /// Every vote reversed.
    pub fn reversed(&self) -> Profile {
        let mut votes = self.votes.clone();
        for row in votes.chunks_exact_mut(self.m) {
            row.reverse();
        }
        Profile { votes, ..self.clone() }
    }

    /// Voters rearranged by `order` (position `j` holds old voter `order[j]`).
    pub fn permuted(&self, order: &VoterOrdering) -> Result<Profile, ProfileError> {
        if order.len() != self.n {
            return Err(ProfileError::BadOrdering { len: self.n });
        }
        self.restrict_voters(order.as_slice())
    }

    /// Distinct votes in order of first appearance, plus for each distinct
    /// vote the list of original voters casting it.
    pub fn dedup(&self) -> (Profile, Vec<Vec<usize>>) {
        let mut seen: std::collections::HashMap<&[usize], usize> = std::collections::HashMap::new();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut votes = Vec::new();
        for (i, vote) in self.votes().enumerate() {
            match seen.get(vote) {
                Some(&g) => groups[g].push(i),
                None => {
                    seen.insert(vote, groups.len());
                    groups.push(vec![i]);
                    votes.extend_from_slice(vote);
                }
            }
        }
        let profile = Profile { m: self.m, n: groups.len(), votes, names: self.names.clone() };
        (profile, groups)
    }

    /// Profile with one more vote appended.
    pub fn with_vote(&self, vote: &[usize]) -> Result<Profile, ProfileError> {
        if !is_permutation(vote, self.m) {
            return Err(ProfileError::NotPermutation { voter: self.n, m: self.m });
        }
        let mut votes = self.votes.clone();
        votes.extend_from_slice(vote);
        Ok(Profile { m: self.m, n: self.n + 1, votes, names: self.names.clone() })
    }

    /// Concatenation of two profiles over the same alternatives.
    pub fn concat(&self, other: &Profile) -> Result<Profile, ProfileError> {
        if other.m != self.m {
            return Err(ProfileError::LengthMismatch { left: self.m, right: other.m });
        }
        let mut votes = self.votes.clone();
        votes.extend_from_slice(&other.votes);
        Ok(Profile { m: self.m, n: self.n + other.n, votes, names: self.names.clone() })
    }
}

fn sorted_selection(keep: &[usize], len: usize) -> Result<Vec<usize>, ProfileError> {
    if keep.is_empty() {
        return Err(ProfileError::EmptySelection);
    }
    let mut sorted = keep.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(ProfileError::Duplicate { id: w[0] });
        }
    }
    if let Some(&last) = sorted.last() {
        if last >= len {
            return Err(ProfileError::OutOfRange { id: last, len });
        }
    }
    Ok(sorted)
}
