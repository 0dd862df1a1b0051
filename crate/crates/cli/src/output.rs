use std::io::{IsTerminal, Write};

/// Where report lines go and how they look. Machine mode prints one
/// `key=value ...` record per line; text mode is for people.
pub struct Out {
    pub machine: bool,
    color: bool,
}

fn quote(v: &str) -> String {
    if v.is_empty() || v.contains(|c: char| c.is_whitespace() || c == '"' || c == '=') {
        format!("{v:?}")
    } else {
        v.to_string()
    }
}

impl Out {
    pub fn new(machine: bool) -> Self {
        Out {
            machine,
            color: !machine && color_wanted(),
        }
    }

    /// A machine record; ignored in text mode.
    pub fn record(&self, fields: &[(&str, String)]) {
        if self.machine {
            let line: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={}", quote(v))).collect();
            let _ = writeln!(std::io::stdout(), "{}", line.join(" "));
        }
    }

    /// A text line; ignored in machine mode.
    pub fn text(&self, line: impl AsRef<str>) {
        if !self.machine {
            let _ = writeln!(std::io::stdout(), "{}", line.as_ref());
        }
    }

    pub fn verdict(&self, ok: bool, word_ok: &str, word_bad: &str) -> String {
        let (word, code) = if ok { (word_ok, "32") } else { (word_bad, "31") };
        if self.color {
            format!("\x1b[{code}m{word}\x1b[0m")
        } else {
            word.to_string()
        }
    }
}

/// `ATRIV_COLOR=always|never|auto`; under `auto` (the default) color is
/// used on a terminal unless `NO_COLOR` is set.
fn color_wanted() -> bool {
    match std::env::var("ATRIV_COLOR").as_deref() {
        Ok("always") => true,
        Ok("never") => false,
        _ => std::env::var_os("NO_COLOR").is_none() && std::io::stdout().is_terminal(),
    }
}
