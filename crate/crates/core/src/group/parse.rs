//! Group specification grammar.
//!
//! ```text
//! spec  := NAME | "perm:" cycles ("," cycles)* | "cayley:" path
//! NAME  := S2|S3|S4|A3|A4|D3|D4|D5|D6|Q8|Z<n>|Z<a>xZ<b>
//! cycles:= ( "(" point (ws point)* ")" )+
//! ```
//!
//! Error offsets count characters from the start of the input.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::{catalog, Group};
use crate::error::{Error, Result};

/// Largest group any constructor will build.
pub const MAX_GROUP_ORDER: usize = 512;

pub fn parse_group_spec(text: &str) -> Result<Group> {
    let lead = text.len() - text.trim_start().len();
    let lead_chars = text[..lead].chars().count();
    let body = text.trim();
    if body.is_empty() {
        return Err(Error::parse(0, "empty group specification"));
    }
    if let Some(rest) = body.strip_prefix("perm:") {
        return parse_perm(rest, lead_chars + 5).map(|g| g.with_name(body.to_string()));
    }
    if let Some(rest) = body.strip_prefix("cayley:") {
        let path = rest.trim();
        if path.is_empty() {
            return Err(Error::parse(lead_chars + 7, "missing path after `cayley:`"));
        }
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
        let stem = std::path::Path::new(path)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.to_string());
        return cayley_from_str(&text, Some(stem));
    }
    parse_name(body, lead_chars)
}

fn parse_name(name: &str, offset: usize) -> Result<Group> {
    let g = match name {
        "S2" => catalog::symmetric(2),
        "S3" => catalog::symmetric(3),
        "S4" => catalog::symmetric(4),
        "A3" => catalog::alternating(3),
        "A4" => catalog::alternating(4),
        "D3" => catalog::dihedral(3),
        "D4" => catalog::dihedral(4),
        "D5" => catalog::dihedral(5),
        "D6" => catalog::dihedral(6),
        "Q8" => catalog::quaternion8(),
        _ => return parse_cyclic_name(name, offset),
    };
    Ok(g)
}

fn parse_cyclic_name(name: &str, offset: usize) -> Result<Group> {
    let unknown = || Error::UnknownName(name.to_string());
    let rest = name.strip_prefix('Z').ok_or_else(unknown)?;
    let (a_txt, b_txt) = match rest.split_once("xZ") {
        Some((a, b)) => (a, Some(b)),
        None => (rest, None),
    };
    let num = |s: &str, at: usize| -> Result<usize> {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(unknown());
        }
        let v: usize = s
            .parse()
            .map_err(|_| Error::parse(at, format!("order `{s}` is too large")))?;
        if v == 0 {
            return Err(Error::parse(at, "group order must be positive"));
        }
        if v > MAX_GROUP_ORDER {
            return Err(Error::BoundExceeded {
                what: "group order",
                value: v,
                limit: MAX_GROUP_ORDER,
            });
        }
        Ok(v)
    };
    let a = num(a_txt, offset + 1)?;
    match b_txt {
        None => Ok(catalog::cyclic(a)),
        Some(b_txt) => {
            let b = num(b_txt, offset + 1 + a_txt.len() + 2)?;
            if a * b > MAX_GROUP_ORDER {
                return Err(Error::BoundExceeded {
                    what: "group order",
                    value: a * b,
                    limit: MAX_GROUP_ORDER,
                });
            }
            Ok(catalog::direct_product_cyclic(a, b))
        }
    }
}

/// Parses `cycles ("," cycles)*`; `base` is the offset of `text` in the input.
fn parse_perm(text: &str, base: usize) -> Result<Group> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut gens: Vec<Vec<Vec<u64>>> = vec![Vec::new()];
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == chars.len() {
        return Err(Error::parse(base + pos, "expected a cycle"));
    }
    while pos < chars.len() {
        match chars[pos] {
            '(' => {
                pos += 1;
                let mut cycle = Vec::new();
                loop {
                    skip_ws(&mut pos);
                    match chars.get(pos) {
                        Some(')') => {
                            pos += 1;
                            break;
                        }
                        Some(c) if c.is_ascii_digit() => {
                            let start = pos;
                            while pos < chars.len() && chars[pos].is_ascii_digit() {
                                pos += 1;
                            }
                            let s: String = chars[start..pos].iter().collect();
                            let v: u64 = s
                                .parse()
                                .map_err(|_| Error::parse(base + start, "point is too large"))?;
                            if cycle.contains(&v) {
                                return Err(Error::parse(base + start, format!("point {v} repeated in cycle")));
                            }
                            cycle.push(v);
                            if let Some(c) = chars.get(pos) {
                                if !c.is_whitespace() && *c != ')' {
                                    return Err(Error::parse(base + pos, format!("unexpected `{c}` in cycle")));
                                }
                            }
                        }
                        Some(c) => {
                            return Err(Error::parse(base + pos, format!("unexpected `{c}` in cycle")))
                        }
                        None => return Err(Error::parse(base + pos, "unclosed cycle")),
                    }
                }
                gens.last_mut().unwrap().push(cycle);
            }
            ',' => {
                if gens.last().unwrap().is_empty() {
                    return Err(Error::parse(base + pos, "empty generator"));
                }
                gens.push(Vec::new());
                pos += 1;
            }
            c if c.is_whitespace() => pos += 1,
            c => return Err(Error::parse(base + pos, format!("unexpected `{c}`"))),
        }
    }
    if gens.last().unwrap().is_empty() {
        return Err(Error::parse(base + pos, "expected a cycle after `,`"));
    }
    let points: Vec<u64> = gens
        .iter()
        .flatten()
        .flatten()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let k = points.len();
    let index = |p: u64| points.binary_search(&p).unwrap();
    let perms: Vec<Vec<usize>> = gens
        .iter()
        .map(|cycles| {
            // Product of cycles, rightmost applied first.
            let mut acc: Vec<usize> = (0..k).collect();
            for cyc in cycles.iter().rev() {
                let mut c: Vec<usize> = (0..k).collect();
                for w in 0..cyc.len() {
                    c[index(cyc[w])] = index(cyc[(w + 1) % cyc.len()]);
                }
                acc = acc.iter().map(|&i| c[i]).collect();
            }
            acc
        })
        .collect();
    let elems = closure(&perms, k)?;
    Ok(catalog::from_permutations(elems, "perm".into()))
}

fn closure(gens: &[Vec<usize>], k: usize) -> Result<Vec<Vec<usize>>> {
    let id: Vec<usize> = (0..k).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
            if seen.insert(y.clone()) {
                if seen.len() > MAX_GROUP_ORDER {
                    return Err(Error::BoundExceeded {
                        what: "permutation group order",
                        value: seen.len(),
                        limit: MAX_GROUP_ORDER,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

pub(crate) fn cayley_from_str(text: &str, name: Option<String>) -> Result<Group> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| {
        let offset = text
            .lines()
            .take(e.line().saturating_sub(1))
            .map(|l| l.chars().count() + 1)
            .sum::<usize>()
            + e.column().saturating_sub(1);
        Error::parse(offset, format!("invalid Cayley JSON: {e}"))
    })?;
    let n = v
        .get("n")
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::NotAGroup("missing integer field `n`".into()))? as usize;
    let rows = v
        .get("table")
        .and_then(|x| x.as_array())
        .ok_or_else(|| Error::NotAGroup("missing array field `table`".into()))?;
    if rows.len() != n {
        return Err(Error::NotAGroup(format!("table has {} rows, n = {n}", rows.len())));
    }
    let mut table = Vec::with_capacity(n);
    for (i, r) in rows.iter().enumerate() {
        let r = r
            .as_array()
            .ok_or_else(|| Error::NotAGroup(format!("row {i} is not an array")))?;
        let row: Option<Vec<usize>> = r.iter().map(|x| x.as_u64().map(|x| x as usize)).collect();
        table.push(row.ok_or_else(|| Error::NotAGroup(format!("row {i} has a non-integer entry")))?);
    }
    Group::from_table(&table, name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_names() {
        assert_eq!(parse_group_spec("S3").unwrap().order(), 6);
        assert_eq!(parse_group_spec("Z1").unwrap().order(), 1);
        assert_eq!(parse_group_spec("  Z2xZ3 ").unwrap().order(), 6);
        assert_eq!(parse_group_spec("D6").unwrap().order(), 12);
        assert!(matches!(parse_group_spec("BadName"), Err(Error::UnknownName(_))));
        assert!(matches!(parse_group_spec("S9"), Err(Error::UnknownName(_))));
        assert!(matches!(parse_group_spec("Z0"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_group_spec("Z2xZ0"), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse_group_spec("Z100000"), Err(Error::BoundExceeded { .. })));
        assert!(matches!(parse_group_spec(""), Err(Error::Parse { offset: 0, .. })));
    }

    #[test]
    fn permutation_closure() {
        let g = parse_group_spec("perm:(1 2 3)(4 5)").unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert!((0..6).any(|x| g.element_order(x) == 6));
        let s3 = parse_group_spec("perm:(1 2), (1 2 3)").unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let s4 = parse_group_spec("perm:(0 1 2 3),(0 1)").unwrap();
        assert_eq!(s4.order(), 24);
    }

    #[test]
    fn perm_errors_carry_offsets() {
        match parse_group_spec("perm:(1 2 x)") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 10),
            other => panic!("{other:?}"),
        }
        match parse_group_spec("perm:(1 2") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 9),
            other => panic!("{other:?}"),
        }
        match parse_group_spec("perm:(1 1)") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 8),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_group_spec("perm:(1 2),"), Err(Error::Parse { .. })));
        assert!(matches!(parse_group_spec("perm:"), Err(Error::Parse { .. })));
    }

    #[test]
    fn cayley_validation() {
        let ok = r#"{"n": 2, "table": [[0,1],[1,0]]}"#;
        assert_eq!(cayley_from_str(ok, None).unwrap().order(), 2);
        let not_latin = r#"{"n": 2, "table": [[0,1],[1,1]]}"#;
        assert!(matches!(cayley_from_str(not_latin, None), Err(Error::NotAGroup(_))));
        // A Latin square with identity that is not associative (order 5 loop).
        let loop5 = r#"{"n":5,"table":[[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]}"#;
        assert!(matches!(cayley_from_str(loop5, None), Err(Error::NotAGroup(_))));
        assert!(matches!(cayley_from_str("{\"n\": 1,", None), Err(Error::Parse { .. })));
    }
}
