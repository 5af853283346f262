use std::fmt;

use crate::error::{Error, Result};

/// A generator or its inverse. Column `2 * index + inverse` in a coset table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gen {
    pub index: usize,
    pub inverse: bool,
}

impl Gen {
    pub fn new(index: usize, inverse: bool) -> Gen {
        Gen { index, inverse }
    }

    pub fn column(self) -> usize {
        2 * self.index + self.inverse as usize
    }

    pub fn inv(self) -> Gen {
        Gen::new(self.index, !self.inverse)
    }

    /// `g^exp` spelled out letter by letter.
    pub fn power(index: usize, exp: i64) -> Vec<Gen> {
        vec![Gen::new(index, exp < 0); exp.unsigned_abs() as usize]
    }
}

pub fn invert_word(w: &[Gen]) -> Vec<Gen> {
    w.iter().rev().map(|g| g.inv()).collect()
}

/// Generators, relators, and generators of the subgroup whose cosets are
/// enumerated. An empty subgroup list means the trivial subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePresentation {
    generators: Vec<String>,
    relators: Vec<Vec<Gen>>,
    subgroup: Vec<Vec<Gen>>,
}

fn valid_name(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_lowercase())
        && cs.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl FinitePresentation {
    pub fn new<I, S>(generators: I) -> FinitePresentation
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        FinitePresentation {
            generators: generators.into_iter().map(Into::into).collect(),
            relators: Vec::new(),
            subgroup: Vec::new(),
        }
    }

    pub fn add_relator(&mut self, w: Vec<Gen>) {
        assert!(w.iter().all(|g| g.index < self.generators.len()));
        self.relators.push(w);
    }

    pub fn add_subgroup_generator(&mut self, w: Vec<Gen>) {
        assert!(w.iter().all(|g| g.index < self.generators.len()));
        self.subgroup.push(w);
    }

    /// Same presentation, cosets of a different subgroup.
    pub fn with_subgroup(&self, subgroup: Vec<Vec<Gen>>) -> FinitePresentation {
        let mut p = FinitePresentation {
            subgroup: Vec::new(),
            ..self.clone()
        };
        for w in subgroup {
            p.add_subgroup_generator(w);
        }
        p
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Vec<Gen>] {
        &self.relators
    }

    pub fn subgroup(&self) -> &[Vec<Gen>] {
        &self.subgroup
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses a word over the declared generators: `a` is a generator, `A`
    /// its inverse, `a^k` / `A^k` powers.
    pub fn parse_word(&self, s: &str) -> Result<Vec<Gen>> {
        let mut out = Vec::new();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?,
                ),
                None => (tok, 1),
            };
            let mut chars = base.chars();
            let first = chars
                .next()
                .ok_or_else(|| Error::Parse(format!("empty generator in {tok:?}")))?;
            let (name, exp) = if first.is_ascii_uppercase() {
                (
                    format!("{}{}", first.to_ascii_lowercase(), chars.as_str()),
                    -exp,
                )
            } else {
                (base.to_string(), exp)
            };
            let index = self
                .generator_index(&name)
                .ok_or_else(|| Error::UnknownGenerator(base.to_string()))?;
            out.extend(Gen::power(index, exp));
        }
        Ok(out)
    }

    /// Reads the text format:
    ///
    /// ```text
    /// gens: b u
    /// rels:
    /// b^6
    /// u^2 b^3 u b^2
    /// sub:
    /// b
    /// ```
    ///
    /// Blank lines and `#` comments are ignored. Words may also follow the
    /// `rels:` / `sub:` headers on the same line.
    pub fn parse(text: &str) -> Result<FinitePresentation> {
        enum Section {
            Start,
            Rels,
            Sub,
        }
        let mut pres: Option<FinitePresentation> = None;
        let mut section = Section::Start;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let body = if let Some(rest) = line.strip_prefix("gens:") {
                if pres.is_some() {
                    return Err(err("duplicate gens line"));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                if let Some(bad) = names.iter().find(|s| !valid_name(s)) {
                    return Err(err(&format!("invalid generator name {bad:?}")));
                }
                for (i, a) in names.iter().enumerate() {
                    if names[..i].contains(a) {
                        return Err(err(&format!("generator {a:?} declared twice")));
                    }
                }
                pres = Some(FinitePresentation::new(names));
                continue;
            } else if let Some(rest) = line.strip_prefix("rels:") {
                section = Section::Rels;
                rest.trim()
            } else if let Some(rest) = line.strip_prefix("sub:") {
                section = Section::Sub;
                rest.trim()
            } else {
                line
            };
            if body.is_empty() {
                continue;
            }
            let p = pres.as_mut().ok_or_else(|| err("words before gens line"))?;
            let w = p.parse_word(body).map_err(|e| err(&e.to_string()))?;
            match section {
                Section::Start => return Err(err("word outside rels:/sub: section")),
                Section::Rels => {
                    if w.is_empty() {
                        return Err(err("empty relator"));
                    }
                    p.relators.push(w);
                }
                Section::Sub => p.subgroup.push(w),
            }
        }
        pres.ok_or_else(|| Error::Parse("missing gens line".into()))
    }

    /// Formats a word with maximal powers, e.g. `u^2 b^3 u b^2`, `X a^-2`.
    pub fn format_word(&self, w: &[Gen]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = &self.generators[w[i].index];
            let run = j - i;
            parts.push(match (w[i].inverse, run) {
                (false, 1) => name.clone(),
                (false, r) => format!("{name}^{r}"),
                (true, 1) => {
                    let mut c = name.chars();
                    let head = c.next().unwrap().to_ascii_uppercase();
                    format!("{head}{}", c.as_str())
                }
                (true, r) => format!("{name}^-{r}"),
            });
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens: {}", self.generators.join(" "))?;
        writeln!(f, "rels:")?;
        for r in &self.relators {
            writeln!(f, "{}", self.format_word(r))?;
        }
        writeln!(f, "sub:")?;
        for s in &self.subgroup {
            writeln!(f, "{}", self.format_word(s))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const K: &str = "gens: b u\nrels:\nb^6\nu^2 b^3 u b^2\nsub:\nb\n";

    #[test]
    fn parse_k_presentation() {
        let p = FinitePresentation::parse(K).unwrap();
        assert_eq!(p.generators(), &["b", "u"]);
        assert_eq!(p.relators().len(), 2);
        assert_eq!(p.relators()[1].len(), 8);
        assert_eq!(p.subgroup(), &[vec![Gen::new(0, false)]]);
        assert_eq!(p.to_string(), K);
        assert_eq!(FinitePresentation::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn parse_word_tokens() {
        let p = FinitePresentation::new(["a", "x"]);
        assert_eq!(
            p.parse_word("x A a^-2 X^2").unwrap(),
            vec![
                Gen::new(1, false),
                Gen::new(0, true),
                Gen::new(0, true),
                Gen::new(0, true),
                Gen::new(1, true),
                Gen::new(1, true),
            ]
        );
        assert_eq!(
            p.format_word(&p.parse_word("x A a^-2 X^2").unwrap()),
            "x a^-3 x^-2"
        );
        assert!(matches!(p.parse_word("y"), Err(Error::UnknownGenerator(_))));
        assert!(p.parse_word("a^q").is_err());
    }

    #[test]
    fn parse_errors() {
        assert!(FinitePresentation::parse("rels:\na\n").is_err());
        assert!(FinitePresentation::parse("gens: a\na\n").is_err());
        assert!(FinitePresentation::parse("gens: a a\n").is_err());
        assert!(FinitePresentation::parse("gens: A\n").is_err());
        assert!(FinitePresentation::parse("gens: a\nrels:\n1\n").is_err());
        assert!(FinitePresentation::parse("").is_err());
    }

    #[test]
    fn inline_sections_and_comments() {
        let p = FinitePresentation::parse("# C5\ngens: a\nrels: a^5\nsub:\n").unwrap();
        assert_eq!(p.relators(), &[Gen::power(0, 5)]);
        assert!(p.subgroup().is_empty());
    }
}
