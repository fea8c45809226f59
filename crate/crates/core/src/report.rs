//! Structured reports: an ordered tree of `key: value` entries, rendered
//! for machines as UTF-8 lines with two-space indentation per level.

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Value(String),
    Block(Vec<(String, Node)>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    entries: Vec<(String, Node)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&mut self, key: impl Into<String>, value: impl ToString) -> &mut Self {
        self.entries.push((key.into(), Node::Value(value.to_string())));
        self
    }

    pub fn block(&mut self, key: impl Into<String>, inner: Report) -> &mut Self {
        self.entries.push((key.into(), Node::Block(inner.entries)));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Node> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        render_into(&self.entries, 0, &mut out);
        out
    }
}

fn render_into(entries: &[(String, Node)], depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    for (k, v) in entries {
        match v {
            Node::Value(s) if s.is_empty() => out.push_str(&format!("{pad}{k}:\n")),
            Node::Value(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
            Node::Block(inner) => {
                out.push_str(&format!("{pad}{k}:\n"));
                render_into(inner, depth + 1, out);
            }
        }
    }
}
