//! Recognizing a compact algebra from its (dimension, rank, center)
//! profile, against the finite dictionary of algebras that occur as
//! stabilizers in the case table: simple classical and exceptional
//! algebras, u(1), the trivial algebra, and two-term sums.

use crate::momentmap::IsotropyProfile;

#[derive(Clone, Debug)]
pub struct AlgebraClass {
    pub name: String,
    pub dim: usize,
    pub rank: usize,
    pub center_dim: usize,
}

fn singles() -> Vec<AlgebraClass> {
    let mut out = vec![
        AlgebraClass { name: "trivial".into(), dim: 0, rank: 0, center_dim: 0 },
        AlgebraClass { name: "u(1)".into(), dim: 1, rank: 1, center_dim: 1 },
        AlgebraClass { name: "g2".into(), dim: 14, rank: 2, center_dim: 0 },
        AlgebraClass { name: "f4".into(), dim: 52, rank: 4, center_dim: 0 },
        AlgebraClass { name: "e6".into(), dim: 78, rank: 6, center_dim: 0 },
        AlgebraClass { name: "e7".into(), dim: 133, rank: 7, center_dim: 0 },
    ];
    for k in 2..=12usize {
        out.push(AlgebraClass {
            name: format!("su({k})"),
            dim: k * k - 1,
            rank: k - 1,
            center_dim: 0,
        });
    }
    for k in 7..=16usize {
        out.push(AlgebraClass {
            name: format!("so({k})"),
            dim: k * (k - 1) / 2,
            rank: k / 2,
            center_dim: 0,
        });
    }
    for k in 2..=8usize {
        out.push(AlgebraClass {
            name: format!("sp({k})"),
            dim: k * (2 * k + 1),
            rank: k,
            center_dim: 0,
        });
    }
    out
}

/// Resolve low-rank coincidences and spin labels onto the names used in
/// the dictionary; sums are split, canonicalized termwise, and sorted.
pub fn canonical_name(name: &str) -> String {
    if name.contains('+') {
        let mut parts: Vec<String> = name.split('+').map(|p| canonical_name(p.trim())).collect();
        parts.sort();
        return parts.join("+");
    }
    let name = name.trim();
    let base = match name {
        "so(2)" => "u(1)",
        "so(3)" | "sp(1)" => "su(2)",
        "so(4)" => "su(2)+su(2)",
        "so(5)" => "sp(2)",
        "so(6)" => "su(4)",
        "su(1)" | "sp(0)" | "so(1)" | "so(0)" => "trivial",
        other => {
            if let Some(k) = other.strip_prefix("spin(").and_then(|s| s.strip_suffix(')')) {
                return canonical_name(&format!("so({k})"));
            }
            other
        }
    };
    if base.contains('+') {
        canonical_name(base)
    } else {
        base.to_string()
    }
}

fn dictionary() -> Vec<AlgebraClass> {
    let singles = singles();
    let mut out = singles.clone();
    for (i, a) in singles.iter().enumerate() {
        if a.dim == 0 {
            continue;
        }
        for b in singles.iter().skip(i) {
            if b.dim == 0 || a.dim + b.dim > 160 {
                continue;
            }
            let mut names = vec![a.name.clone(), b.name.clone()];
            names.sort();
            out.push(AlgebraClass {
                name: names.join("+"),
                dim: a.dim + b.dim,
                rank: a.rank + b.rank,
                center_dim: a.center_dim + b.center_dim,
            });
        }
    }
    out
}

/// All dictionary entries whose (dim, rank, center) triple matches.
/// Coincidences (e.g. so(8) vs g2+g2 at (28,4,0)) yield several names.
pub fn identify_algebra(profile: &IsotropyProfile) -> Vec<String> {
    let mut names: Vec<String> = dictionary()
        .into_iter()
        .filter(|c| {
            c.dim == profile.dim && c.rank == profile.rank && c.center_dim == profile.center_dim
        })
        .map(|c| canonical_name(&c.name))
        .collect();
    names.sort();
    names.dedup();
    names
}

/// Whether the measured profile is consistent with the named algebra.
pub fn consistent_with(profile: &IsotropyProfile, expected: &str) -> bool {
    identify_algebra(profile).contains(&canonical_name(expected))
}

/// The dictionary entry for a (possibly aliased) name, if present.
pub fn class_for_name(name: &str) -> Option<AlgebraClass> {
    let canonical = canonical_name(name);
    dictionary()
        .into_iter()
        .find(|c| canonical_name(&c.name) == canonical)
}
