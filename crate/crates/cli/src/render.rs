use serde_json::Value;

/// A command result: a one-line summary plus the data it summarises.
pub struct Report {
    pub summary: String,
    pub data: Value,
    pub code: i32,
    /// Plain output is the summary alone.
    pub raw: bool,
}

impl Report {
    pub fn ok(summary: String, data: Value) -> Self {
        Report {
            summary,
            data,
            code: 0,
            raw: false,
        }
    }

    pub fn raw(self) -> Self {
        Report { raw: true, ..self }
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            return serde_json::to_string_pretty(&self.data).unwrap_or_default() + "\n";
        }
        let mut out = self.summary.clone();
        out.push('\n');
        if self.raw {
            return out;
        }
        for line in flatten(&self.data) {
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// `key: value` lines for every leaf of `v`. Objects and arrays of objects
/// are expanded with dotted keys; other arrays print as compact JSON.
pub fn flatten(v: &Value) -> Vec<String> {
    let mut out = Vec::new();
    walk("", v, &mut out);
    out
}

fn walk(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                walk(&key(k), x, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object()) => {
            for (i, x) in a.iter().enumerate() {
                walk(&key(&i.to_string()), x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix}: {s}")),
        _ => out.push(format!("{prefix}: {v}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flattens_nested_values() {
        let v = json!({"a": 1, "b": {"c": [1, 2], "d": null}, "e": [{"f": "x"}]});
        assert_eq!(flatten(&v), ["a: 1", "b.c: [1,2]", "b.d: null", "e.0.f: x"]);
    }
}
