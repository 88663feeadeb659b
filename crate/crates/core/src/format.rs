//! Line-oriented text formats for instances, decode results and single
//! polynomials.
//!
//! All three share the same conventions: UTF-8, one directive per line,
//! decimal integers, `#` starts a comment. Field elements are written as
//! residues in `0..p`; signed input is accepted and reduced.
//!
//! ```text
//! %SPI 1
//! field p=10007
//! basis power
//! bounds B=2 D=50 E=2
//! seed 7
//! poly t=2
//! term -13 5
//! term 29 77
//! errors k=1
//! err 1234 99
//! ```
//!
//! An instance may also carry `transcript k=<n>` followed by `at <point>
//! <value>` lines; `verify` then checks against those pairs instead of the
//! decoder's probes.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::blackbox::Instance;
use crate::decode::{Candidate, DecodeResult};
use crate::error::{Error, Result};
use crate::scalar::{Felt, PrimeField};
use crate::sparse::{Basis, SparsePoly};

pub const INSTANCE_MAGIC: &str = "%SPI 1";
pub const RESULT_MAGIC: &str = "%SPI-RESULT 1";
pub const POLY_MAGIC: &str = "%SPI-POLY 1";

/// A decode result as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultFile {
    pub field: PrimeField,
    pub basis: Basis,
    pub probes_used: usize,
    pub candidates: Vec<Candidate>,
}

impl ResultFile {
    pub fn from_decode(field: PrimeField, basis: Basis, res: &DecodeResult) -> Self {
        ResultFile { field, basis, probes_used: res.probes_used, candidates: res.candidates.clone() }
    }
}

fn write_terms(out: &mut String, header: &str, f: &SparsePoly) {
    writeln!(out, "{header} t={}", f.sparsity()).unwrap();
    for &(d, c) in f.terms() {
        writeln!(out, "term {d} {c}").unwrap();
    }
}

pub fn write_instance(inst: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "{INSTANCE_MAGIC}").unwrap();
    writeln!(out, "field p={}", inst.field.modulus()).unwrap();
    writeln!(out, "basis {}", inst.basis.name()).unwrap();
    writeln!(out, "bounds B={} D={} E={}", inst.b, inst.d, inst.e).unwrap();
    writeln!(out, "seed {}", inst.seed).unwrap();
    write_terms(&mut out, "poly", &inst.hidden);
    writeln!(out, "errors k={}", inst.errors.len()).unwrap();
    for (x, v) in &inst.errors {
        writeln!(out, "err {x} {v}").unwrap();
    }
    if let Some(tr) = &inst.transcript {
        writeln!(out, "transcript k={}", tr.len()).unwrap();
        for (x, v) in tr {
            writeln!(out, "at {x} {v}").unwrap();
        }
    }
    out
}

pub fn write_result(res: &ResultFile) -> String {
    let mut out = String::new();
    writeln!(out, "{RESULT_MAGIC}").unwrap();
    writeln!(out, "field p={}", res.field.modulus()).unwrap();
    writeln!(out, "basis {}", res.basis.name()).unwrap();
    writeln!(out, "N {}", res.probes_used).unwrap();
    for c in &res.candidates {
        write_terms(&mut out, "candidate", &c.poly);
        write!(out, "mismatches {}", c.mismatches.len()).unwrap();
        for (s, i) in &c.mismatches {
            write!(out, " {s}:{i}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn write_poly(f: &SparsePoly) -> String {
    let mut out = String::new();
    writeln!(out, "{POLY_MAGIC}").unwrap();
    writeln!(out, "field p={}", f.field().modulus()).unwrap();
    writeln!(out, "basis {}", f.basis().name()).unwrap();
    write_terms(&mut out, "poly", f);
    out
}

/// Meaningful lines with their 1-based numbers, comments and blanks removed.
struct Lines<'a> {
    items: Vec<(usize, Vec<&'a str>)>,
    pos: usize,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .filter_map(|(k, line)| {
                let body = line.split('#').next().unwrap_or("");
                let words: Vec<&str> = body.split_whitespace().collect();
                (!words.is_empty()).then_some((k + 1, words))
            })
            .collect();
        Lines { items, pos: 0, last: 0 }
    }

    fn err(&self, line: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, msg: msg.into() }
    }

    fn peek(&self) -> Option<&str> {
        self.items.get(self.pos).map(|(_, w)| w[0])
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.items.get(self.pos) {
            Some(item) => {
                self.pos += 1;
                self.last = item.0;
                Ok(item.clone())
            }
            None => Err(self.err(self.last + 1, format!("unexpected end of input, expected {what}"))),
        }
    }

    /// Next line, which must start with `keyword` and have `arity` arguments.
    fn expect(&mut self, keyword: &str, arity: usize) -> Result<(usize, Vec<&'a str>)> {
        let (line, words) = self.next(keyword)?;
        if words[0] != keyword {
            return Err(self.err(line, format!("expected `{keyword}`, found `{}`", words[0])));
        }
        if words.len() != arity + 1 {
            return Err(self.err(line, format!("`{keyword}` takes {arity} argument(s)")));
        }
        Ok((line, words[1..].to_vec()))
    }

    fn magic(&mut self, magic: &str) -> Result<()> {
        let (line, words) = self.next(magic)?;
        if words.join(" ") != magic {
            return Err(self.err(line, format!("expected header `{magic}`")));
        }
        Ok(())
    }

    fn finish(&self) -> Result<()> {
        match self.items.get(self.pos) {
            Some((line, w)) => Err(self.err(*line, format!("unexpected `{}`", w[0]))),
            None => Ok(()),
        }
    }
}

fn num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse { line, msg: format!("`{s}` is not a valid number") })
}

/// Value of `key=<n>`.
fn keyed<T: std::str::FromStr>(line: usize, s: &str, key: &str) -> Result<T> {
    let v = s
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| Error::Parse { line, msg: format!("expected `{key}=<n>`, found `{s}`") })?;
    num(line, v)
}

fn elem(field: PrimeField, line: usize, s: &str) -> Result<Felt> {
    Ok(field.int(num::<i64>(line, s)?))
}

fn parse_field(lines: &mut Lines) -> Result<PrimeField> {
    let (line, a) = lines.expect("field", 1)?;
    PrimeField::new(keyed(line, a[0], "p")?).map_err(|e| Error::Parse { line, msg: e.to_string() })
}

fn parse_basis(lines: &mut Lines) -> Result<Basis> {
    let (line, a) = lines.expect("basis", 1)?;
    Basis::parse(a[0]).ok_or_else(|| Error::Parse { line, msg: format!("unknown basis `{}`", a[0]) })
}

fn parse_terms(lines: &mut Lines, header: &str, field: PrimeField, basis: Basis) -> Result<SparsePoly> {
    let (line, a) = lines.expect(header, 1)?;
    let t: usize = keyed(line, a[0], "t")?;
    let mut terms = Vec::with_capacity(t);
    let mut last = None;
    for _ in 0..t {
        let (line, a) = lines.expect("term", 2)?;
        let d: i64 = num(line, a[0])?;
        let c = elem(field, line, a[1])?;
        if last.is_some_and(|l| d <= l) {
            return Err(Error::Parse { line, msg: "term degrees must be strictly increasing".into() });
        }
        if c.is_zero() {
            return Err(Error::Parse { line, msg: "term coefficients must be nonzero".into() });
        }
        last = Some(d);
        terms.push((d, c));
    }
    SparsePoly::new(field, basis, terms).map_err(|e| Error::Parse { line, msg: e.to_string() })
}

fn parse_pairs(lines: &mut Lines, header: &str, item: &str, field: PrimeField) -> Result<Vec<(Felt, Felt)>> {
    let (line, a) = lines.expect(header, 1)?;
    let k: usize = keyed(line, a[0], "k")?;
    (0..k)
        .map(|_| {
            let (line, a) = lines.expect(item, 2)?;
            Ok((elem(field, line, a[0])?, elem(field, line, a[1])?))
        })
        .collect()
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut lines = Lines::new(text);
    lines.magic(INSTANCE_MAGIC)?;
    let field = parse_field(&mut lines)?;
    let basis = parse_basis(&mut lines)?;
    let (line, a) = lines.expect("bounds", 3)?;
    let (b, d, e) = (keyed(line, a[0], "B")?, keyed(line, a[1], "D")?, keyed(line, a[2], "E")?);
    let (line, a) = lines.expect("seed", 1)?;
    let seed = num(line, a[0])?;
    let hidden = parse_terms(&mut lines, "poly", field, basis)?;
    let err_line = lines.items.get(lines.pos).map_or(0, |i| i.0);
    let mut errors = BTreeMap::new();
    for (x, v) in parse_pairs(&mut lines, "errors", "err", field)? {
        if errors.insert(x, v).is_some() {
            return Err(Error::Parse { line: err_line, msg: format!("point {x} is planned twice") });
        }
    }
    let transcript = if lines.peek() == Some("transcript") {
        Some(parse_pairs(&mut lines, "transcript", "at", field)?)
    } else {
        None
    };
    lines.finish()?;
    Ok(Instance { field, basis, b, d, e, seed, hidden, errors, transcript })
}

pub fn parse_result(text: &str) -> Result<ResultFile> {
    let mut lines = Lines::new(text);
    lines.magic(RESULT_MAGIC)?;
    let field = parse_field(&mut lines)?;
    let basis = parse_basis(&mut lines)?;
    let (line, a) = lines.expect("N", 1)?;
    let probes_used = num(line, a[0])?;
    let mut candidates = Vec::new();
    while lines.peek().is_some() {
        let poly = parse_terms(&mut lines, "candidate", field, basis)?;
        let (line, words) = lines.next("mismatches")?;
        if words[0] != "mismatches" || words.len() < 2 {
            return Err(Error::Parse { line, msg: "expected `mismatches <count> ...`".into() });
        }
        let count: usize = num(line, words[1])?;
        let mismatches = words[2..]
            .iter()
            .map(|w| {
                let (s, i) = w
                    .split_once(':')
                    .ok_or_else(|| Error::Parse { line, msg: format!("expected `<block>:<index>`, found `{w}`") })?;
                Ok((num(line, s)?, num(line, i)?))
            })
            .collect::<Result<Vec<(usize, usize)>>>()?;
        if mismatches.len() != count {
            return Err(Error::Parse {
                line,
                msg: format!("{count} mismatches declared, {} listed", mismatches.len()),
            });
        }
        candidates.push(Candidate { poly, mismatches });
    }
    Ok(ResultFile { field, basis, probes_used, candidates })
}

pub fn parse_poly(text: &str) -> Result<SparsePoly> {
    let mut lines = Lines::new(text);
    lines.magic(POLY_MAGIC)?;
    let field = parse_field(&mut lines)?;
    let basis = parse_basis(&mut lines)?;
    let f = parse_terms(&mut lines, "poly", field, basis)?;
    lines.finish()?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blackbox::{make_instance, InstanceConfig};
    use crate::fixtures::non_unique_example;
    use proptest::prelude::*;

    #[test]
    fn instance_text_layout() {
        let f = PrimeField::new(101).unwrap();
        let inst = Instance {
            field: f,
            basis: Basis::Power,
            b: 1,
            d: 10,
            e: 1,
            seed: 4,
            hidden: SparsePoly::from_ints(f, Basis::Power, &[(2, 3)]).unwrap(),
            errors: BTreeMap::from([(f.elem(4), f.elem(7))]),
            transcript: None,
        };
        let text = write_instance(&inst);
        assert_eq!(
            text,
            "%SPI 1\nfield p=101\nbasis power\nbounds B=1 D=10 E=1\nseed 4\npoly t=1\nterm 2 3\nerrors k=1\nerr 4 7\n"
        );
        assert_eq!(parse_instance(&text).unwrap(), inst);
    }

    #[test]
    fn comments_and_negative_coefficients() {
        let text = "# generated by hand\n%SPI 1\nfield p=101  # small\nbasis cheb1\n\nbounds B=2 D=5 E=0\nseed 0\npoly t=2\nterm 0 -1\nterm 5 2\nerrors k=0\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.hidden.terms()[0].1.residue(), 100);
        assert_eq!(inst.basis, Basis::Chebyshev1);
    }

    #[test]
    fn malformed_inputs_report_lines() {
        let good = write_instance(&non_unique_example().instance());
        assert!(parse_instance(&good).is_ok());
        let bad_field = good.replace("field p=13", "field p=12");
        assert!(matches!(parse_instance(&bad_field), Err(Error::Parse { line: 2, .. })));
        let bad_basis = good.replace("basis cheb1", "basis legendre");
        assert!(matches!(parse_instance(&bad_basis), Err(Error::Parse { line: 3, .. })));
        let truncated: String = good.lines().take(7).collect::<Vec<_>>().join("\n");
        assert!(matches!(parse_instance(&truncated), Err(Error::Parse { .. })));
        assert!(parse_instance(&format!("{good}extra 1\n")).is_err());
        assert!(parse_instance("%SPI 2\n").is_err());
        let unsorted =
            "%SPI 1\nfield p=101\nbasis power\nbounds B=2 D=5 E=0\nseed 0\npoly t=2\nterm 3 1\nterm 1 1\nerrors k=0\n";
        assert!(matches!(parse_instance(unsorted), Err(Error::Parse { line: 8, .. })));
    }

    #[test]
    fn poly_round_trip() {
        let ex = non_unique_example();
        for f in [&ex.f1, &ex.f2] {
            assert_eq!(&parse_poly(&write_poly(f)).unwrap(), f);
        }
    }

    proptest! {
        #[test]
        fn instance_round_trip(seed in 0u64..1000, e in 0usize..5, cheb in any::<bool>(), b in 1usize..4) {
            let basis = if cheb { Basis::Chebyshev1 } else { Basis::Power };
            let cfg = InstanceConfig { p: 10007, basis, b, d: 30, e, t: None };
            let (inst, _) = make_instance(&cfg, seed).unwrap();
            let text = write_instance(&inst);
            prop_assert_eq!(parse_instance(&text).unwrap(), inst);
        }

        #[test]
        fn result_round_trip(
            polys in proptest::collection::vec(proptest::collection::vec((-30i64..30, 1u64..101), 0..4), 0..4),
            mism in proptest::collection::vec((1usize..4, 1usize..20), 0..5),
            n in 0usize..100,
        ) {
            let f = PrimeField::new(101).unwrap();
            let candidates = polys
                .into_iter()
                .map(|t| Candidate {
                    poly: SparsePoly::new(f, Basis::Power, t.into_iter().map(|(d, c)| (d, f.elem(c)))).unwrap(),
                    mismatches: mism.clone(),
                })
                .collect();
            let res = ResultFile { field: f, basis: Basis::Power, probes_used: n, candidates };
            prop_assert_eq!(parse_result(&write_result(&res)).unwrap(), res);
        }
    }
}
