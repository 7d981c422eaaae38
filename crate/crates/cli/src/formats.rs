//! The GSEM v1 and QFZ v1 file formats.
//!
//! Both are UTF-8, line-oriented, `#` starts a comment, blank lines are
//! ignored.
//!
//! GSEM v1 describes a gamma-semigroup:
//!
//! ```text
//! gsem v1
//! S: a b c
//! G: y d
//! SGS y:          # |S| rows of |S| entries; row = left operand
//! a a a
//! b b b
//! c c c
//! SGS d:
//! a a a
//! b b b
//! c c c
//! # optional, one block per carrier element: |Γ| rows of |Γ| entries
//! # GSG a: ...
//! ```
//!
//! QFZ v1 describes a Q-fuzzy subset; omitted pairs have grade 0:
//!
//! ```text
//! qfz v1
//! Q: p
//! mu a p 0.8
//! mu b p 7/10
//! ```

use std::str::FromStr;
use std::sync::Arc;

use qgamma_core::{Error as CoreError, GammaSemigroup, Grade, QFuzzySubset, QSet, SymbolTable};

use crate::error::{CliError, Result};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }

    /// Next significant line: comments stripped, blank lines skipped.
    /// Returns (1-based line number, trimmed content).
    fn next_significant(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.inner.by_ref() {
            let content = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            };
            let content = content.trim();
            if !content.is_empty() {
                return Some((idx + 1, content));
            }
        }
        None
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        msg: msg.into(),
    }
}

fn lookup(table: &SymbolTable, token: &str, line: usize) -> Result<usize> {
    table.lookup(token).ok_or_else(|| CliError::UnknownSymbol {
        line,
        symbol: token.to_string(),
    })
}

/// Parses a GSEM v1 document and builds the validated structure.
pub fn parse_gsem(text: &str) -> Result<GammaSemigroup> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines
        .next_significant()
        .ok_or_else(|| parse_err(0, "empty input"))?;
    if header != "gsem v1" {
        return Err(parse_err(ln, format!("expected 'gsem v1', found {header:?}")));
    }

    let mut carrier: Option<Arc<SymbolTable>> = None;
    let mut gamma: Option<Arc<SymbolTable>> = None;
    let mut sgs: Vec<Option<Vec<Vec<usize>>>> = Vec::new();
    let mut gsg: Vec<Option<Vec<Vec<usize>>>> = Vec::new();

    while let Some((ln, line)) = lines.next_significant() {
        if let Some(rest) = line.strip_prefix("S:") {
            if carrier.is_some() {
                return Err(parse_err(ln, "S declared twice"));
            }
            let t = SymbolTable::new(rest.split_whitespace())
                .map_err(|e| CliError::CoreAt { line: ln, source: e })?;
            carrier = Some(t);
        } else if let Some(rest) = line.strip_prefix("G:") {
            if gamma.is_some() {
                return Err(parse_err(ln, "G declared twice"));
            }
            let t = SymbolTable::new(rest.split_whitespace())
                .map_err(|e| CliError::CoreAt { line: ln, source: e })?;
            gamma = Some(t);
        } else if let Some(rest) = line.strip_prefix("SGS ") {
            let (s, g) = match (&carrier, &gamma) {
                (Some(s), Some(g)) => (s, g),
                _ => return Err(parse_err(ln, "SGS block before S: and G: declarations")),
            };
            if sgs.is_empty() {
                sgs = vec![None; g.len()];
                gsg = vec![None; s.len()];
            }
            let name = rest
                .strip_suffix(':')
                .ok_or_else(|| parse_err(ln, "SGS block must end with ':'"))?
                .trim();
            let gi = lookup(g, name, ln)?;
            if sgs[gi].is_some() {
                return Err(parse_err(ln, format!("duplicate SGS block for {name:?}")));
            }
            let mut rows = Vec::with_capacity(s.len());
            for _ in 0..s.len() {
                let (rl, row) = lines
                    .next_significant()
                    .ok_or_else(|| parse_err(ln, format!("SGS {name}: missing rows")))?;
                let entries: Vec<usize> = row
                    .split_whitespace()
                    .map(|tok| lookup(s, tok, rl))
                    .collect::<Result<_>>()?;
                if entries.len() != s.len() {
                    return Err(parse_err(
                        rl,
                        format!("expected {} entries, found {}", s.len(), entries.len()),
                    ));
                }
                rows.push(entries);
            }
            sgs[gi] = Some(rows);
        } else if let Some(rest) = line.strip_prefix("GSG ") {
            let (s, g) = match (&carrier, &gamma) {
                (Some(s), Some(g)) => (s, g),
                _ => return Err(parse_err(ln, "GSG block before S: and G: declarations")),
            };
            if sgs.is_empty() {
                sgs = vec![None; g.len()];
                gsg = vec![None; s.len()];
            }
            let name = rest
                .strip_suffix(':')
                .ok_or_else(|| parse_err(ln, "GSG block must end with ':'"))?
                .trim();
            let si = lookup(s, name, ln)?;
            if gsg[si].is_some() {
                return Err(parse_err(ln, format!("duplicate GSG block for {name:?}")));
            }
            let mut rows = Vec::with_capacity(g.len());
            for _ in 0..g.len() {
                let (rl, row) = lines
                    .next_significant()
                    .ok_or_else(|| parse_err(ln, format!("GSG {name}: missing rows")))?;
                let entries: Vec<usize> = row
                    .split_whitespace()
                    .map(|tok| lookup(g, tok, rl))
                    .collect::<Result<_>>()?;
                if entries.len() != g.len() {
                    return Err(parse_err(
                        rl,
                        format!("expected {} entries, found {}", g.len(), entries.len()),
                    ));
                }
                rows.push(entries);
            }
            gsg[si] = Some(rows);
        } else {
            return Err(parse_err(ln, format!("unrecognised directive {line:?}")));
        }
    }

    let carrier = carrier.ok_or_else(|| parse_err(0, "missing S: declaration"))?;
    let gamma = gamma.ok_or_else(|| parse_err(0, "missing G: declaration"))?;
    if sgs.is_empty() {
        sgs = vec![None; gamma.len()];
        gsg = vec![None; carrier.len()];
    }

    // every gamma symbol needs its SGS block
    let mut s_table: Vec<Vec<Vec<usize>>> = vec![Vec::new(); carrier.len()];
    let mut by_gamma = Vec::with_capacity(gamma.len());
    for (gi, block) in sgs.iter().enumerate() {
        match block {
            Some(rows) => by_gamma.push(rows.clone()),
            None => {
                return Err(parse_err(
                    0,
                    format!("missing SGS block for {:?}", gamma.name(gi)),
                ))
            }
        }
    }
    for (x, row_holder) in s_table.iter_mut().enumerate() {
        for by in by_gamma.iter() {
            row_holder.push(by[x].clone());
        }
    }

    // GSG blocks are all-or-nothing
    let g_table = if gsg.iter().all(|b| b.is_none()) {
        None
    } else {
        let mut missing = gsg.iter().enumerate().filter(|(_, b)| b.is_none());
        if let Some((si, _)) = missing.next() {
            return Err(parse_err(
                0,
                format!("missing GSG block for {:?}", carrier.name(si)),
            ));
        }
        // g_table[a][s][b] with a,b gamma indices and s a carrier index
        let mut t: Vec<Vec<Vec<usize>>> =
            vec![vec![vec![0; gamma.len()]; carrier.len()]; gamma.len()];
        for (si, block) in gsg.iter().enumerate() {
            let rows = block.as_ref().unwrap();
            for (a, row) in rows.iter().enumerate() {
                for (b, &e) in row.iter().enumerate() {
                    t[a][si][b] = e;
                }
            }
        }
        Some(t)
    };

    GammaSemigroup::from_tables(carrier, gamma, s_table, g_table).map_err(CliError::Core)
}

/// Renders a structure as a canonical GSEM v1 document.
pub fn render_gsem(g: &GammaSemigroup) -> String {
    let s = g.carrier();
    let ga = g.gamma();
    let mut out = String::from("gsem v1\n");
    out.push_str(&format!(
        "S: {}\n",
        s.names().collect::<Vec<_>>().join(" ")
    ));
    out.push_str(&format!(
        "G: {}\n",
        ga.names().collect::<Vec<_>>().join(" ")
    ));
    for gi in ga.indices() {
        out.push_str(&format!("SGS {}:\n", ga.name(gi)));
        for x in s.indices() {
            let row: Vec<&str> = s
                .indices()
                .map(|y| s.name(g.s_prod(x, gi, y)))
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    if g.both_sided() {
        for si in s.indices() {
            out.push_str(&format!("GSG {}:\n", s.name(si)));
            for a in ga.indices() {
                let row: Vec<&str> = ga
                    .indices()
                    .map(|b| ga.name(g.g_prod(a, si, b)))
                    .collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
    }
    out
}

/// Parses a QFZ v1 document against a known universe. The Q-set comes
/// from the file; unlisted (element, q) pairs get grade 0.
pub fn parse_qfz(text: &str, domain: &Arc<SymbolTable>) -> Result<QFuzzySubset> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines
        .next_significant()
        .ok_or_else(|| parse_err(0, "empty input"))?;
    if header != "qfz v1" {
        return Err(parse_err(ln, format!("expected 'qfz v1', found {header:?}")));
    }
    let (ln, qline) = lines
        .next_significant()
        .ok_or_else(|| parse_err(0, "missing Q: declaration"))?;
    let rest = qline
        .strip_prefix("Q:")
        .ok_or_else(|| parse_err(ln, "expected Q: declaration"))?;
    let qtable = SymbolTable::new(rest.split_whitespace())
        .map_err(|e| CliError::CoreAt { line: ln, source: e })?;
    let qset = Arc::new(QSet::new(qtable));

    let nq = qset.len();
    let mut grades = vec![Grade::ZERO; domain.len() * nq];
    let mut seen = vec![false; grades.len()];
    while let Some((ln, line)) = lines.next_significant() {
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("mu") => {}
            _ => return Err(parse_err(ln, format!("expected 'mu' line, found {line:?}"))),
        }
        let (x, q, val) = match (tokens.next(), tokens.next(), tokens.next(), tokens.next()) {
            (Some(x), Some(q), Some(v), None) => (x, q, v),
            _ => return Err(parse_err(ln, "expected 'mu <element> <q> <grade>'")),
        };
        let xi = lookup(domain, x, ln)?;
        let qi = qset
            .lookup(q)
            .ok_or_else(|| CliError::UnknownSymbol {
                line: ln,
                symbol: q.to_string(),
            })?;
        let grade = Grade::from_str(val).map_err(|e| match e {
            CoreError::OutOfRange(_) => CliError::CoreAt { line: ln, source: e },
            other => parse_err(ln, other.to_string()),
        })?;
        let cell = xi * nq + qi;
        if seen[cell] {
            return Err(parse_err(ln, format!("duplicate grade for ({x},{q})")));
        }
        seen[cell] = true;
        grades[cell] = grade;
    }
    QFuzzySubset::from_grades(domain.clone(), qset, grades).map_err(CliError::Core)
}

/// Renders a fuzzy subset as a canonical QFZ v1 document: declaration
/// order, zero grades omitted, grades as `n/d`.
pub fn render_qfz(mu: &QFuzzySubset) -> String {
    let mut out = String::from("qfz v1\n");
    out.push_str(&format!(
        "Q: {}\n",
        mu.qset().names().names().collect::<Vec<_>>().join(" ")
    ));
    for x in mu.domain().indices() {
        for q in 0..mu.qset().len() {
            let g = mu.grade(x, q);
            if !g.is_zero() {
                out.push_str(&format!(
                    "mu {} {} {}\n",
                    mu.domain().name(x),
                    mu.qset().name(q),
                    g
                ));
            }
        }
    }
    out
}
