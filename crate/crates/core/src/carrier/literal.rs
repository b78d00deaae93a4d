//! Text literals for interval sets: `(-inf,0] u [1,2) u {3}`.

use num::{BigInt, BigRational, Num};

use super::interval::{Bound, Interval, IntervalSet, Q};
use super::CarrierError;

/// Parses a rational probe such as `3`, `-1/2` or `0.25`.
pub fn parse_rational(s: &str) -> Result<Q, CarrierError> {
    let s = s.trim();
    let bad = || CarrierError::NonRationalProbe(s.to_string());
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str_radix(n.trim(), 10).map_err(|_| bad())?;
        let d = BigInt::from_str_radix(d.trim(), 10).map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let n = BigInt::from_str_radix(&digits, 10).map_err(|_| bad())?;
        let d = BigInt::from(10).pow(frac.len() as u32);
        let v = BigRational::new(n, d);
        return Ok(if neg { -v } else { v });
    }
    let n = BigInt::from_str_radix(s, 10).map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}

fn parse_bound(s: &str) -> Result<Bound, CarrierError> {
    match s.trim() {
        "-inf" => Ok(Bound::NegInf),
        "inf" | "+inf" => Ok(Bound::PosInf),
        t => parse_rational(t)
            .map(Bound::Finite)
            .map_err(|_| CarrierError::MalformedInterval(format!("bad endpoint `{t}`"))),
    }
}

fn parse_piece(s: &str) -> Result<Vec<Interval>, CarrierError> {
    let bad = |why: &str| CarrierError::MalformedInterval(format!("`{s}`: {why}"));
    let s = s.trim();
    let first = s.chars().next().ok_or_else(|| bad("empty piece"))?;
    let last = s.chars().last().unwrap();
    if first == '{' {
        if last != '}' {
            return Err(bad("unterminated point set"));
        }
        let body = &s[1..s.len() - 1];
        if body.trim().is_empty() {
            return Ok(Vec::new());
        }
        return body
            .split(',')
            .map(|p| match parse_bound(p)? {
                Bound::Finite(v) => Ok(Interval::point(v)),
                _ => Err(bad("infinite point")),
            })
            .collect();
    }
    let lo_closed = match first {
        '[' => true,
        '(' => false,
        _ => return Err(bad("expected `[`, `(` or `{`")),
    };
    let hi_closed = match last {
        ']' => true,
        ')' => false,
        _ => return Err(bad("expected `]` or `)`")),
    };
    let body = &s[1..s.len() - 1];
    let (l, h) = body.split_once(',').ok_or_else(|| bad("missing comma"))?;
    Ok(vec![Interval::new(parse_bound(l)?, lo_closed, parse_bound(h)?, hi_closed)?])
}

/// Parses an interval-set literal. Accepts `{}` and `empty` for the empty set
/// and `R` for the whole line.
pub fn parse_interval_set(s: &str) -> Result<IntervalSet, CarrierError> {
    let t = s.trim();
    match t {
        "" => return Err(CarrierError::MalformedInterval("empty literal".into())),
        "empty" => return Ok(IntervalSet::empty()),
        "R" => return Ok(IntervalSet::full()),
        _ => {}
    }
    let mut raw = Vec::new();
    for piece in split_union(t) {
        raw.extend(parse_piece(piece)?);
    }
    IntervalSet::normalize(raw)
}

/// Splits on the union keyword ` u ` at bracket depth zero.
fn split_union(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'[' | b'(' | b'{' => depth += 1,
            b']' | b')' | b'}' => depth -= 1,
            b'u' | b'U' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        i += 1;
    }
    out.push(&s[start..]);
    out
}

impl std::str::FromStr for IntervalSet {
    type Err = CarrierError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_interval_set(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::interval::{q, qf};

    #[test]
    fn parse_print_round_trip() {
        let src = "(-inf,0] u [1,2) u {3}";
        let s = parse_interval_set(src).unwrap();
        assert_eq!(s.component_count(), 3);
        assert_eq!(s.to_string(), src);
        assert_eq!(parse_interval_set(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn rationals_and_specials() {
        let s = parse_interval_set("[-1/2, 3/4) U {5/10}").unwrap();
        assert_eq!(s.to_string(), "[-1/2,3/4)");
        assert!(s.contains_point(&qf(1, 2)));
        assert_eq!(parse_interval_set("{}").unwrap(), IntervalSet::empty());
        assert_eq!(parse_interval_set("(-inf,inf)").unwrap().to_string(), "(-inf,inf)");
        assert_eq!(parse_interval_set("{1,2}").unwrap().component_count(), 2);
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["[-inf,0]", "(2,1)", "[3,3)", "[0,1", "0,1]", "(a,b)", "{inf}"] {
            assert!(
                matches!(parse_interval_set(bad), Err(CarrierError::MalformedInterval(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn probes() {
        assert_eq!(parse_rational("0.25").unwrap(), qf(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), qf(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), q(7));
        for bad in ["inf", "sqrt2", "1e3", "1/0", "pi"] {
            assert!(matches!(parse_rational(bad), Err(CarrierError::NonRationalProbe(_))));
        }
    }
}
