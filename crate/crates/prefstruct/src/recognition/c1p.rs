use prefstruct_core::{Axis, Profile};

/// A rectangular 0/1 matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl BinaryMatrix {
    pub fn new(rows: Vec<Vec<bool>>) -> Option<BinaryMatrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        let n = rows.len();
        Some(BinaryMatrix { rows: n, cols, bits: rows.into_iter().flatten().collect() })
    }

    /// Parses rows written as strings of `0` and `1`.
    pub fn from_strings(rows: &[&str]) -> Option<BinaryMatrix> {
        let parsed: Option<Vec<Vec<bool>>> = rows
            .iter()
            .map(|r| {
                r.chars()
                    .map(|c| match c {
                        '0' => Some(false),
                        '1' => Some(true),
                        _ => None,
                    })
                    .collect()
            })
            .collect();
        BinaryMatrix::new(parsed?)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[bool] {
        &self.bits[r * self.cols..(r + 1) * self.cols]
    }

    /// Whether each row's ones are consecutive under the column `order`.
    pub fn is_consecutive_under(&self, order: &[usize]) -> bool {
        (0..self.rows).all(|r| {
            let ones: Vec<usize> = (0..self.cols).filter(|&k| self.get(r, order[k])).collect();
            ones.windows(2).all(|w| w[1] == w[0] + 1)
        })
    }
}

/// A column order making every row's ones consecutive, if one exists.
///
/// Rows become column sets. Sets that overlap (intersect without nesting)
/// are grouped into components; within a component the arrangement is
/// forced up to reversal and is built by inserting sets one at a time while
/// refining an ordered partition of the columns covered so far. Components
/// nest inside single classes of one another, so the final order places
/// each component's arrangement inside its parent's class. Quadratic in the
/// number of rows.
pub fn c1p_check(matrix: &BinaryMatrix) -> Option<Vec<usize>> {
    let cols = matrix.cols();
    let mut sets: Vec<Vec<usize>> = (0..matrix.rows())
        .map(|r| (0..cols).filter(|&c| matrix.get(r, c)).collect::<Vec<_>>())
        .filter(|s| s.len() >= 2 && s.len() < cols)
        .collect();
    sets.sort();
    sets.dedup();
    let order = arrange(cols, &sets)?;
    debug_assert!(matrix.is_consecutive_under(&order));
    Some(order)
}

struct Component {
    union: Vec<usize>,
    /// ordered classes of columns
    classes: Vec<Vec<usize>>,
    single: bool,
}

fn arrange(cols: usize, sets: &[Vec<usize>]) -> Option<Vec<usize>> {
    let member: Vec<Vec<bool>> = sets
        .iter()
        .map(|s| {
            let mut v = vec![false; cols];
            s.iter().for_each(|&c| v[c] = true);
            v
        })
        .collect();
    let overlaps = |x: usize, y: usize| {
        let inter = sets[x].iter().filter(|&&c| member[y][c]).count();
        inter > 0 && inter < sets[x].len() && inter < sets[y].len()
    };
    let mut seen = vec![false; sets.len()];
    let mut components = Vec::new();
    for start in 0..sets.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut queue = vec![start];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let fresh: Vec<usize> = (0..sets.len()).filter(|&y| !seen[y] && overlaps(x, y)).collect();
            for y in fresh {
                seen[y] = true;
                queue.push(y);
            }
        }
        components.push(build_component(cols, sets, &queue)?);
    }
    // larger unions first; at equal size a single set defers to a richer
    // component with the same union
    components.sort_by_key(|c| (std::cmp::Reverse(c.union.len()), c.single));
    let mut deepest = vec![usize::MAX; cols];
    // children[component][class] and top-level roots
    let mut children: Vec<Vec<Vec<usize>>> = components.iter().map(|c| vec![Vec::new(); c.classes.len()]).collect();
    let mut roots = Vec::new();
    let mut class_of: Vec<Vec<usize>> = Vec::with_capacity(components.len());
    for (id, comp) in components.iter().enumerate() {
        let mut cls = vec![usize::MAX; cols];
        for (k, class) in comp.classes.iter().enumerate() {
            class.iter().for_each(|&c| cls[c] = k);
        }
        class_of.push(cls);
        let parent = deepest[comp.union[0]];
        if parent != usize::MAX && components[parent].union.len() == comp.union.len() && comp.single {
            // a single set spanning its parent's whole union adds nothing
            continue;
        }
        match parent {
            usize::MAX => roots.push(id),
            par => children[par][class_of[par][comp.union[0]]].push(id),
        }
        comp.union.iter().for_each(|&c| deepest[c] = id);
    }
    let mut placed = vec![false; cols];
    let mut order = Vec::with_capacity(cols);
    fn emit(
        id: usize,
        components: &[Component],
        children: &[Vec<Vec<usize>>],
        placed: &mut [bool],
        order: &mut Vec<usize>,
    ) {
        for (k, class) in components[id].classes.iter().enumerate() {
            for &child in &children[id][k] {
                emit(child, components, children, placed, order);
            }
            for &c in class {
                if !placed[c] {
                    placed[c] = true;
                    order.push(c);
                }
            }
        }
    }
    for &root in &roots {
        emit(root, &components, &children, &mut placed, &mut order);
    }
    order.extend((0..cols).filter(|&c| !placed[c]));
    Some(order)
}

/// Inserts the sets of one overlap component (in an order where each set
/// overlaps an earlier one) into an ordered partition.
fn build_component(cols: usize, sets: &[Vec<usize>], members: &[usize]) -> Option<Component> {
    let mut classes: Vec<Vec<usize>> = vec![sets[members[0]].clone()];
    let mut covered = vec![false; cols];
    sets[members[0]].iter().for_each(|&c| covered[c] = true);
    for &s in &members[1..] {
        let set = &sets[s];
        let mut inside = vec![false; cols];
        set.iter().for_each(|&c| inside[c] = true);
        let fresh: Vec<usize> = set.iter().copied().filter(|&c| !covered[c]).collect();
        // per class: 0 = untouched, 1 = partly inside, 2 = fully inside
        let state: Vec<u8> = classes
            .iter()
            .map(|cl| {
                let hit = cl.iter().filter(|&&c| inside[c]).count();
                if hit == 0 {
                    0
                } else if hit == cl.len() {
                    2
                } else {
                    1
                }
            })
            .collect();
        let first = state.iter().position(|&x| x > 0)?;
        let last = state.iter().rposition(|&x| x > 0)?;
        if last > first && state[first + 1..last].iter().any(|&x| x != 2) {
            return None;
        }
        let k = classes.len();
        let split = |cl: &Vec<usize>, inner_first: bool| -> [Vec<usize>; 2] {
            let (inn, out): (Vec<usize>, Vec<usize>) = cl.iter().partition(|&&c| inside[c]);
            if inner_first {
                [inn, out]
            } else {
                [out, inn]
            }
        };
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(k + 3);
        if fresh.is_empty() {
            if first == last {
                return None;
            }
            for (j, cl) in classes.iter().enumerate() {
                if j == first && state[j] == 1 {
                    next.extend(split(cl, false));
                } else if j == last && state[j] == 1 {
                    next.extend(split(cl, true));
                } else {
                    next.push(cl.clone());
                }
            }
        } else {
            // the new columns go at an end; every touched class except the
            // innermost one must be fully inside
            let right_ok = last == k - 1 && state[first + 1..].iter().all(|&x| x == 2);
            let left_ok = first == 0 && state[..last].iter().all(|&x| x == 2);
            if right_ok {
                for (j, cl) in classes.iter().enumerate() {
                    if j == first && state[j] == 1 {
                        next.extend(split(cl, false));
                    } else {
                        next.push(cl.clone());
                    }
                }
                next.push(fresh.clone());
            } else if left_ok {
                next.push(fresh.clone());
                for (j, cl) in classes.iter().enumerate() {
                    if j == last && state[j] == 1 {
                        next.extend(split(cl, true));
                    } else {
                        next.push(cl.clone());
                    }
                }
            } else {
                return None;
            }
            fresh.iter().for_each(|&c| covered[c] = true);
        }
        classes = next.into_iter().filter(|cl| !cl.is_empty()).collect();
    }
    let mut union: Vec<usize> = (0..cols).filter(|&c| covered[c]).collect();
    union.sort_unstable();
    Some(Component { union, classes, single: members.len() == 1 })
}

/// Single-peakedness through the consecutive-ones property: one row per
/// prefix of every vote, columns are alternatives, and a valid column order
/// is an axis.
pub fn recognize_sp_via_c1p(p: &Profile) -> Option<Axis> {
    let m = p.m();
    let mut rows = Vec::with_capacity(p.n() * m);
    for vote in p.votes() {
        let mut row = vec![false; m];
        for &a in vote {
            row[a] = true;
            rows.push(row.clone());
        }
    }
    let matrix = BinaryMatrix::new(rows).expect("rectangular");
    c1p_check(&matrix).map(|order| Axis::new(order).expect("column order is a permutation"))
}
