//! Group-descriptor grammar.
//!
//! `C<n>`, `D<n>` (dihedral of ORDER n, n even >= 4), `Dih(<n>)` (dihedral on
//! n points, i.e. order 2n), `Q8`, `S<n>`, `A<n>`, products `<g> x <g>`, and
//! `perm:<cycles>[,<cycles>...]` with zero-based points.

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub(crate) struct ParsedDescriptor {
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub name: String,
}

pub(crate) fn parse(descriptor: &str) -> Result<ParsedDescriptor> {
    let text = descriptor.trim();
    if text.is_empty() {
        return err(descriptor, "empty descriptor");
    }
    let parts: Vec<&str> = text.split(['x', '×']).map(str::trim).collect();
    if parts.len() == 1 {
        return parse_atom(parts[0], descriptor);
    }
    let mut atoms = Vec::with_capacity(parts.len());
    for part in parts {
        if part.is_empty() {
            return err(descriptor, "empty factor in product");
        }
        atoms.push(parse_atom(part, descriptor)?);
    }
    let degree: usize = atoms.iter().map(|a| a.degree).sum();
    let mut generators = Vec::new();
    let mut offset = 0;
    for atom in &atoms {
        for g in &atom.generators {
            generators.push(g.embed(degree, offset));
        }
        offset += atom.degree;
    }
    let name = atoms
        .iter()
        .map(|a| a.name.as_str())
        .collect::<Vec<_>>()
        .join(" x ");
    Ok(ParsedDescriptor {
        degree,
        generators,
        name,
    })
}

fn parse_atom(atom: &str, whole: &str) -> Result<ParsedDescriptor> {
    if let Some(rest) = atom.strip_prefix("perm:") {
        return parse_perm(rest, whole);
    }
    if atom == "Q8" {
        // the regular representation of the quaternion group
        let i = Permutation::from_cycles(8, &[vec![0, 2, 1, 3], vec![4, 6, 5, 7]])?;
        let j = Permutation::from_cycles(8, &[vec![0, 4, 1, 5], vec![2, 7, 3, 6]])?;
        return Ok(ParsedDescriptor {
            degree: 8,
            generators: vec![i, j],
            name: "Q8".into(),
        });
    }
    if let Some(inner) = atom.strip_prefix("Dih(").and_then(|s| s.strip_suffix(')')) {
        let m = parse_num(inner, whole, 1)?;
        return dihedral_on_points(m);
    }
    if let Some(digits) = atom.strip_prefix('C') {
        let n = parse_num(digits, whole, 1)?;
        return Ok(cyclic(n));
    }
    if let Some(digits) = atom.strip_prefix('D') {
        let n = parse_num(digits, whole, 1)?;
        if n < 4 || n % 2 != 0 {
            return err(
                whole,
                "D<n> means dihedral of order n, with n even and >= 4",
            );
        }
        return dihedral_on_points(n / 2);
    }
    if let Some(digits) = atom.strip_prefix('S') {
        let n = parse_num(digits, whole, 1)?;
        return Ok(symmetric(n));
    }
    if let Some(digits) = atom.strip_prefix('A') {
        let n = parse_num(digits, whole, 1)?;
        return Ok(alternating(n));
    }
    err(whole, &format!("unknown atom `{atom}`"))
}

fn cyclic(n: usize) -> ParsedDescriptor {
    let generators = if n == 1 {
        Vec::new()
    } else {
        vec![Permutation::from_cycles(n, &[(0..n).collect()]).expect("full cycle")]
    };
    ParsedDescriptor {
        degree: n.max(1),
        generators,
        name: format!("C{n}"),
    }
}

/// Dihedral group acting on `m` points, order `2m`; named by its order.
fn dihedral_on_points(m: usize) -> Result<ParsedDescriptor> {
    let name = format!("D{}", 2 * m);
    if m == 1 {
        return Ok(ParsedDescriptor {
            degree: 2,
            generators: vec![Permutation::from_cycles(2, &[vec![0, 1]])?],
            name,
        });
    }
    if m == 2 {
        // the Klein four-group needs 4 points for a faithful action
        return Ok(ParsedDescriptor {
            degree: 4,
            generators: vec![
                Permutation::from_cycles(4, &[vec![0, 1]])?,
                Permutation::from_cycles(4, &[vec![2, 3]])?,
            ],
            name,
        });
    }
    let rotation = Permutation::from_cycles(m, &[(0..m).collect()])?;
    let reflection = Permutation::from_images((0..m).map(|i| (m - i) % m).collect())?;
    Ok(ParsedDescriptor {
        degree: m,
        generators: vec![rotation, reflection],
        name,
    })
}

fn symmetric(n: usize) -> ParsedDescriptor {
    let mut generators = Vec::new();
    if n >= 2 {
        generators.push(Permutation::from_cycles(n, &[vec![0, 1]]).expect("transposition"));
    }
    if n >= 3 {
        generators.push(Permutation::from_cycles(n, &[(0..n).collect()]).expect("full cycle"));
    }
    ParsedDescriptor {
        degree: n.max(1),
        generators,
        name: format!("S{n}"),
    }
}

fn alternating(n: usize) -> ParsedDescriptor {
    let mut generators = Vec::new();
    if n >= 3 {
        generators.push(Permutation::from_cycles(n, &[vec![0, 1, 2]]).expect("3-cycle"));
    }
    if n >= 4 {
        let long: Vec<usize> = if n % 2 == 1 {
            (0..n).collect()
        } else {
            (1..n).collect()
        };
        generators.push(Permutation::from_cycles(n, &[long]).expect("long cycle"));
    }
    ParsedDescriptor {
        degree: n.max(1),
        generators,
        name: format!("A{n}"),
    }
}

fn parse_perm(rest: &str, whole: &str) -> Result<ParsedDescriptor> {
    let gen_texts: Vec<&str> = rest.split(',').map(str::trim).collect();
    let mut gen_cycles: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut degree = 1;
    for text in &gen_texts {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut remaining = *text;
        while !remaining.is_empty() {
            let Some(open) = remaining.find('(') else {
                return err(whole, "expected `(` in cycle list");
            };
            if !remaining[..open].trim().is_empty() {
                return err(whole, "unexpected text between cycles");
            }
            let Some(close) = remaining.find(')') else {
                return err(whole, "unbalanced parentheses in cycle");
            };
            if close < open {
                return err(whole, "unbalanced parentheses in cycle");
            }
            let mut cycle = Vec::new();
            for tok in remaining[open + 1..close].split_whitespace() {
                match tok.parse::<usize>() {
                    Ok(pt) => cycle.push(pt),
                    Err(_) => return err(whole, &format!("bad point `{tok}` in cycle")),
                }
            }
            for &pt in &cycle {
                degree = degree.max(pt + 1);
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            remaining = &remaining[close + 1..];
        }
        gen_cycles.push(cycles);
    }
    let mut generators = Vec::new();
    for cycles in &gen_cycles {
        generators.push(Permutation::from_cycles(degree, cycles)?);
    }
    Ok(ParsedDescriptor {
        degree,
        generators,
        name: format!("perm:{}", gen_texts.join(",")),
    })
}

fn parse_num(digits: &str, whole: &str, min: usize) -> Result<usize> {
    match digits.trim().parse::<usize>() {
        Ok(n) if n >= min => Ok(n),
        _ => err(
            whole,
            &format!("expected an integer >= {min}, got `{digits}`"),
        ),
    }
}

fn err<T>(descriptor: &str, reason: &str) -> Result<T> {
    Err(Error::Descriptor {
        descriptor: descriptor.to_string(),
        reason: reason.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atoms_and_products() {
        assert_eq!(parse("C6").unwrap().degree, 6);
        assert_eq!(parse("S4").unwrap().name, "S4");
        assert_eq!(parse("C2 x C4").unwrap().degree, 6);
        assert_eq!(parse("C2xC4").unwrap().name, "C2 x C4");
        assert_eq!(parse("Dih(3)").unwrap().name, "D6");
        assert!(parse("D5").is_err());
        assert!(parse("C0").is_err());
        assert!(parse("").is_err());
        assert!(parse("C2 x").is_err());
    }

    #[test]
    fn perm_cycles() {
        let p = parse("perm:(0 1 2)(3 4),(0 1)").unwrap();
        assert_eq!(p.degree, 5);
        assert_eq!(p.generators.len(), 2);
        assert_eq!(p.generators[0].to_string(), "(0 1 2)(3 4)");
        assert!(parse("perm:(0 1").is_err());
        assert!(parse("perm:(0 a)").is_err());
    }
}
