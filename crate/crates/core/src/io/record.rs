use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{LatticePoint, Solution};

/// One claimed cover: lattice parameter, claimed bound and the vertices.
///
/// Text form: `<n> <t> (x,y) (x,y) ...`, with an optional `<=` before `t`
/// and an optional trailing `# source` comment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionRecord {
    pub n: u32,
    pub t_claimed: usize,
    pub vertices: Vec<LatticePoint>,
    #[serde(default)]
    pub source: String,
}

impl SolutionRecord {
    pub fn from_solution(s: &Solution, source: impl Into<String>) -> Self {
        Self {
            n: s.n(),
            t_claimed: s.len(),
            vertices: s.vertices().to_vec(),
            source: source.into(),
        }
    }

    pub fn solution(&self) -> Result<Solution> {
        Solution::new(self.n, self.vertices.clone())
    }
}

pub fn format_solution_line(record: &SolutionRecord) -> String {
    let mut out = format!("{} {}", record.n, record.t_claimed);
    for p in &record.vertices {
        out.push_str(&format!(" {p}"));
    }
    if !record.source.is_empty() {
        out.push_str(" # ");
        out.push_str(&record.source);
    }
    out
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, at: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.text[..at].chars().count() + 1,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn at_end(&self) -> bool {
        self.pos >= self.text.len()
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.text[self.pos..].starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        let digits = self.text[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.err(start, format!("expected {what}")));
        }
        self.pos += digits;
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.err(start, format!("{what} is too large")))
    }
}

fn parse_at(text: &str, line: usize) -> Result<SolutionRecord> {
    let (body, source) = match text.find('#') {
        Some(i) => (&text[..i], text[i + 1..].trim().to_string()),
        None => (text, String::new()),
    };
    let mut c = Cursor {
        text: body,
        pos: 0,
        line,
    };
    c.skip_ws();
    let n = c.number("lattice parameter n")?;
    c.skip_ws();
    if c.eat("<=") {
        c.skip_ws();
    }
    let t_claimed = c.number("claimed size t")? as usize;
    let mut vertices: Vec<(usize, LatticePoint)> = Vec::new();
    loop {
        c.skip_ws();
        if c.at_end() {
            break;
        }
        let start = c.pos;
        if !c.eat("(") {
            return Err(c.err(
                start,
                format!("expected `(` but found `{}`", c.peek().unwrap_or(' ')),
            ));
        }
        c.skip_ws();
        let x = c.number("x coordinate")?;
        c.skip_ws();
        if !c.eat(",") {
            return Err(c.err(c.pos, "expected `,` inside coordinate pair"));
        }
        c.skip_ws();
        let y = c.number("y coordinate")?;
        c.skip_ws();
        if !c.eat(")") {
            return Err(c.err(c.pos, "expected `)` closing coordinate pair"));
        }
        let p = LatticePoint::new(x, y);
        if !p.in_lattice(n) {
            return Err(c.err(start, format!("vertex {p} outside 0..={n}")));
        }
        vertices.push((start, p));
    }
    vertices.sort_by_key(|&(_, p)| p);
    if let Some(w) = vertices.windows(2).find(|w| w[0].1 == w[1].1) {
        let at = w[0].0.max(w[1].0);
        return Err(c.err(at, format!("duplicate vertex {}", w[0].1)));
    }
    Ok(SolutionRecord {
        n,
        t_claimed,
        vertices: vertices.into_iter().map(|(_, p)| p).collect(),
        source,
    })
}

pub fn parse_solution_line(text: &str) -> Result<SolutionRecord> {
    parse_at(text, 1)
}

/// Parses every non-blank, non-`#` line. Records without an inline source
/// get `origin:line`.
pub fn parse_corpus(text: &str, origin: &str) -> Result<Vec<SolutionRecord>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut rec = parse_at(line, i + 1)?;
        if rec.source.is_empty() {
            rec.source = format!("{origin}:{}", i + 1);
        }
        out.push(rec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_table_row() {
        let r = parse_solution_line(
            "12 11 (0,0) (0,3) (2,12) (3,6) (3,9) (6,3) (6,12) (9,6) (9,9) (12,0) (12,3)",
        )
        .unwrap();
        assert_eq!(r.n, 12);
        assert_eq!(r.t_claimed, 11);
        assert_eq!(r.vertices.len(), 11);
    }

    #[test]
    fn accepts_le_prefix_and_sorts() {
        let r = parse_solution_line("2 <=4 (2,2) (0,0) (2,0) (0,2)").unwrap();
        assert_eq!(r.t_claimed, 4);
        assert_eq!(r.solution().unwrap(), Solution::corners(2));
        assert_eq!(
            parse_solution_line("2 <= 4 (0,0) (0,2)").unwrap().t_claimed,
            4
        );
    }

    #[test]
    fn rejects_out_of_range() {
        let err = parse_solution_line("2 4 (0,0) (0,3)").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                column: 11,
                message: "vertex (0,3) outside 0..=2".into()
            }
        );
    }

    #[test]
    fn rejects_malformed_and_duplicates() {
        assert!(matches!(
            parse_solution_line("2 4 (0,0) (1;1)"),
            Err(Error::Parse { column: 13, .. })
        ));
        assert!(matches!(
            parse_solution_line("2 4 (0,0) 1,1"),
            Err(Error::Parse { column: 11, .. })
        ));
        assert!(matches!(
            parse_solution_line("2 4 (1,1) (0,0) (1,1)"),
            Err(Error::Parse { column: 17, .. })
        ));
        assert!(matches!(
            parse_solution_line("x 4"),
            Err(Error::Parse { column: 1, .. })
        ));
    }

    #[test]
    fn corpus_skips_comments_and_numbers_lines() {
        let text = "# header\n\n3 4 (0,0) (0,3) (3,0) (3,3)\n2 4 (0,0) (0,2) (2,0) (2,2) # mine\n";
        let recs = parse_corpus(text, "f.txt").unwrap();
        assert_eq!(recs[0].source, "f.txt:3");
        assert_eq!(recs[1].source, "mine");
        let err = parse_corpus("2 4 (0,0)\n2 4 (9,9)\n", "f").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn json_schema() {
        let r = parse_solution_line("2 4 (0,0) (0,2) # x").unwrap();
        let j = serde_json::to_value(&r).unwrap();
        assert_eq!(
            j,
            serde_json::json!({"n": 2, "t_claimed": 4, "vertices": [[0, 0], [0, 2]], "source": "x"})
        );
        let back: SolutionRecord = serde_json::from_value(j).unwrap();
        assert_eq!(back, r);
    }

    fn record() -> impl Strategy<Value = SolutionRecord> {
        (1u32..40).prop_flat_map(|n| {
            (
                Just(n),
                0usize..200,
                proptest::collection::btree_set((0..=n, 0..=n), 0..30),
                "[a-zA-Z0-9_.: -]{0,20}",
            )
                .prop_map(|(n, t, pts, src)| SolutionRecord {
                    n,
                    t_claimed: t,
                    vertices: pts.into_iter().map(LatticePoint::from).collect(),
                    source: src.trim().to_string(),
                })
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(r in record()) {
            prop_assert_eq!(parse_solution_line(&format_solution_line(&r)).unwrap(), r);
        }
    }
}
