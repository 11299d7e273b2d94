//! Textual syntax shared by the command line and fixture files.
//!
//! * weights: `C2:[0,1]` in fundamental coordinates, `GL4:(2,1,0,0)` or
//!   `C2:(1,1)` in lattice (epsilon) coordinates, products joined with `x`:
//!   `GL3xGL3:(3,1,0)x(2,1,1)`;
//! * Weyl words: `s1*s2*s1`, `w0`, `e`;
//! * permutations: one-line `[2,1,4,3]` or cycles `(1 2)(3 4)`, 1-based.

use crate::error::{Error, Result};
use crate::rootlat::{Family, RootDatum, Weight};
use crate::weyl::{self, WeylElement};

fn parse_ints(body: &str) -> Result<Vec<i64>> {
    body.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
        .collect()
}

/// Splits `A1xC2` style names at the `x` between factor names, leaving
/// coordinate blocks alone.
fn split_blocks(s: &str) -> Result<Vec<(char, &str)>> {
    let mut out = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest.chars().next().unwrap();
        let close = match open {
            '[' => ']',
            '(' => ')',
            _ => return Err(Error::Parse(format!("expected `[` or `(` at `{rest}`"))),
        };
        let end = rest
            .find(close)
            .ok_or_else(|| Error::Parse(format!("unclosed `{open}` in `{s}`")))?;
        out.push((open, &rest[1..end]));
        rest = rest[end + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(['x', '×', '*']) {
            rest = r.trim_start();
        }
    }
    Ok(out)
}

/// Parses the coordinate part of a weight literal for a known datum.
pub fn parse_weight_in(datum: &RootDatum, s: &str) -> Result<Weight> {
    let s = match s.split_once(':') {
        Some((name, coords)) => {
            let named = RootDatum::parse(name)?;
            if &named != datum {
                return Err(Error::DatumMismatch(format!(
                    "weight literal is for {}, expected {}",
                    named.name(),
                    datum.name()
                )));
            }
            coords
        }
        None => s,
    };
    let blocks = split_blocks(s)?;
    let factors = datum.factors();
    if blocks.len() != factors.len() {
        return Err(Error::Parse(format!(
            "{} has {} factors but the literal has {} blocks",
            datum.name(),
            factors.len(),
            blocks.len()
        )));
    }
    let mut display = Vec::with_capacity(datum.display_len());
    let mut lattice = Weight::zero(datum.lattice_rank());
    let mut any_display = false;
    for (f, (bracket, body)) in factors.iter().zip(&blocks) {
        let coords = parse_ints(body)?;
        let semisimple = f.spec.is_semisimple();
        if *bracket == '[' || !semisimple {
            let want = if semisimple {
                f.spec.semisimple_rank()
            } else {
                f.spec.lattice_dim()
            };
            if coords.len() != want {
                return Err(Error::DimensionMismatch {
                    expected: want,
                    got: coords.len(),
                });
            }
            display.extend(coords);
            any_display = true;
        } else {
            if f.spec.family == Family::G2 {
                return Err(Error::Parse("G2 weights take fundamental coordinates `[a,b]`".into()));
            }
            let r = f.lattice_range();
            if coords.len() != r.len() {
                return Err(Error::DimensionMismatch {
                    expected: r.len(),
                    got: coords.len(),
                });
            }
            lattice.0[r.clone()].copy_from_slice(&coords);
            let w = datum.canonicalize(&lattice);
            display.extend(f.simple_range().map(|i| w.dot(&datum.simple_coroots()[i])));
        }
    }
    if !any_display {
        return Ok(datum.canonicalize(&lattice));
    }
    datum.from_display(&display)
}

/// Parses `NAME:coords`, returning the datum it names as well.
pub fn parse_weight(s: &str) -> Result<(RootDatum, Weight)> {
    let (name, _) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("weight literal `{s}` lacks a `DATUM:` prefix")))?;
    let datum = RootDatum::parse(name)?;
    let w = parse_weight_in(&datum, s)?;
    Ok((datum, w))
}

/// Parses `s1*s2*s1` (1-based simple reflections), `w0`, `e` or `id`.
pub fn parse_weyl_word(datum: &RootDatum, s: &str) -> Result<WeylElement> {
    let s = s.trim();
    match s {
        "" | "e" | "id" | "1" => return Ok(WeylElement::identity(datum)),
        "w0" => return Ok(weyl::longest_element(datum)),
        _ => {}
    }
    let mut word = Vec::new();
    for tok in s.split(['*', ' ', '.']).filter(|t| !t.is_empty()) {
        let idx: usize = tok
            .strip_prefix('s')
            .and_then(|n| n.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| Error::Parse(format!("bad Weyl generator `{tok}`")))?;
        word.push(idx - 1);
    }
    WeylElement::from_word(datum, &word)
}

/// Parses a permutation of `n` letters, returning it 0-based in one-line
/// notation: `perm[i]` is the image of `i`.
pub fn parse_permutation(s: &str, n: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if matches!(s, "" | "e" | "id") {
        return Ok((0..n).collect());
    }
    let letter = |t: &str| -> Result<usize> {
        let k: usize = t
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad permutation letter `{t}`")))?;
        if k == 0 || k > n {
            return Err(Error::Parse(format!("letter {k} outside 1..={n}")));
        }
        Ok(k - 1)
    };
    let perm = if let Some(body) = s.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unclosed `[` in `{s}`")))?;
        body.split(',').map(letter).collect::<Result<Vec<_>>>()?
    } else if s.starts_with('(') {
        let mut perm: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let body = cycle
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("bad cycle `{cycle}`")))?;
            let letters: Vec<usize> = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(letter)
                .collect::<Result<_>>()?;
            for (i, &a) in letters.iter().enumerate() {
                if std::mem::replace(&mut seen[a], true) {
                    return Err(Error::Parse(format!("letter {} repeated in `{s}`", a + 1)));
                }
                perm[a] = letters[(i + 1) % letters.len()];
            }
        }
        perm
    } else {
        return Err(Error::Parse(format!("bad permutation `{s}`")));
    };
    weyl::check_permutation(&perm, n)?;
    Ok(perm)
}

/// One-line 1-based form of a 0-based permutation.
pub fn format_permutation(perm: &[usize]) -> String {
    let body: Vec<String> = perm.iter().map(|p| (p + 1).to_string()).collect();
    format!("[{}]", body.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_round_trip() {
        for lit in ["C2:[0,1]", "GL4:(2,1,0,0)", "GL3xGL3:(3,1,0)x(2,1,1)", "A1xC2:[1]x[0,2]", "G2:[1,0]"] {
            let (d, w) = parse_weight(lit).unwrap();
            assert_eq!(d.format_weight(&w), lit);
        }
        let (c2, w) = parse_weight("C2:(1,1)").unwrap();
        assert_eq!(c2.format_weight(&w), "C2:[0,1]");
        let (a2, w) = parse_weight("A2:(2,1,1)").unwrap();
        assert_eq!(a2.format_weight(&w), "A2:[1,0]");
        assert!(parse_weight("C2:[0,1,2]").is_err());
        assert!(parse_weight("[0,1]").is_err());
        assert!(parse_weight_in(&c2, "A2:[0,1]").is_err());
        assert_eq!(parse_weight_in(&c2, "[0,1]").unwrap(), parse_weight("C2:[0,1]").unwrap().1);
    }

    #[test]
    fn weyl_words() {
        let c2 = RootDatum::parse("C2").unwrap();
        let w = parse_weyl_word(&c2, "s1*s2").unwrap();
        assert_eq!(w.length(), 2);
        assert_eq!(parse_weyl_word(&c2, "w0").unwrap().length(), 4);
        assert!(parse_weyl_word(&c2, "e").unwrap().is_identity());
        assert!(parse_weyl_word(&c2, "s3").is_err());
        assert!(parse_weyl_word(&c2, "t1").is_err());
        let back = parse_weyl_word(&c2, &w.format(&c2)).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn permutations() {
        assert_eq!(parse_permutation("[1,3,2,4]", 4).unwrap(), vec![0, 2, 1, 3]);
        assert_eq!(parse_permutation("(2 3)", 4).unwrap(), vec![0, 2, 1, 3]);
        assert_eq!(parse_permutation("(1 2 3)", 3).unwrap(), vec![1, 2, 0]);
        assert_eq!(parse_permutation("id", 2).unwrap(), vec![0, 1]);
        assert!(parse_permutation("[1,1,2]", 3).is_err());
        assert!(parse_permutation("(1 5)", 4).is_err());
        assert_eq!(format_permutation(&[0, 2, 1, 3]), "[1,3,2,4]");
    }
}
