//! Plain-text rendering for `--pretty`.

use serde_json::Value;

/// Reports become a domain table; other objects print one `key: value`
/// line per field.
pub(crate) fn render(value: &Value) -> String {
    if let Some(domains) = value.get("domains").and_then(Value::as_array) {
        let mut out = format!(
            "{} alternatives, {} voters\n",
            value["alternatives"], value["voters"]
        );
        let width = domains.iter().map(|d| inline(&d["domain"]).len()).max().unwrap_or(0);
        for d in domains {
            let member = if d["member"] == Value::Bool(true) { "yes" } else { "no " };
            let evidence = d.get("witness").or_else(|| d.get("certificate")).map(inline).unwrap_or_default();
            out.push_str(&format!("{:<width$}  {member}  {evidence}\n", inline(&d["domain"])));
        }
        return out.trim_end().to_string();
    }
    match value {
        Value::Object(map) => {
            let width = map.keys().map(String::len).max().unwrap_or(0);
            map.iter()
                .filter(|(key, _)| key.as_str() != "wall_time_ms")
                .map(|(key, v)| format!("{key:<width$}  {}", inline(v)))
                .collect::<Vec<_>>()
                .join("\n")
        }
        other => inline(other),
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(map) => map.iter().map(|(k, x)| format!("{k}={}", inline(x))).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
