use serde_json::Value;

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn rows(items: &[Value], out: &mut String) {
    let Some(Value::Object(first)) = items.first() else {
        for v in items {
            out.push_str(&cell(v));
            out.push('\n');
        }
        return;
    };
    let keys: Vec<&String> = first.keys().collect();
    out.push_str(&keys.iter().map(|k| k.as_str()).collect::<Vec<_>>().join("\t"));
    out.push('\n');
    for v in items {
        let line: Vec<String> = keys.iter().map(|k| cell(v.get(k.as_str()).unwrap_or(&Value::Null))).collect();
        out.push_str(&line.join("\t"));
        out.push('\n');
    }
}

/// Plain-text rendering: scalar fields as `key: value`, arrays of records as tab-separated rows.
pub fn render_table(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Array(items) => rows(items, &mut out),
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Array(items) if items.iter().all(Value::is_object) && !items.is_empty() => {
                        out.push_str(&format!("{k}:\n"));
                        rows(items, &mut out);
                    }
                    _ => out.push_str(&format!("{k}: {}\n", cell(x))),
                }
            }
        }
        other => {
            out.push_str(&cell(other));
            out.push('\n');
        }
    }
    out
}
