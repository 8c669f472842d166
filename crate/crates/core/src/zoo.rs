//! Concrete examples: group algebras from Cayley tables, the C3/C6 matched pair,
//! Sweedler's H4 and the cyclic actions on it.

use std::sync::Arc;

use crate::actions::{ActionKind, LinearAction, MatchedPair, Side};
use crate::error::{Error, Result};
use crate::hopf::{CoalgebraData, HopfAlgebraData};
use crate::linalg::SparseMatrix;
use crate::scalar::{Field, Scalar};

/// Multiplication table of a finite group, `table[i][j] = index of g_i g_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    table: Vec<Vec<usize>>,
    identity: usize,
    labels: Vec<String>,
}

impl CayleyTable {
    /// Validates the Latin-square, identity, inverse and associativity laws.
    pub fn new(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if labels.len() != n {
            return Err(Error::InvalidTable(format!("{} labels for order {n}", labels.len())));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidTable(format!("entry {v} out of range in row {i}")));
            }
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut row_seen[table[i][j]], true) {
                    return Err(Error::InvalidTable(format!("row {i} repeats an element")));
                }
                if std::mem::replace(&mut col_seen[table[j][i]], true) {
                    return Err(Error::InvalidTable(format!("column {i} repeats an element")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        // A Latin square with identity has two-sided inverses once associative.
        Ok(CayleyTable {
            table,
            identity,
            labels,
        })
    }

    /// `C_n` with elements `1, g, g^2, …` (generator name configurable).
    pub fn cyclic(n: usize, generator: &str) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTable("cyclic group of order 0".into()));
        }
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        CayleyTable::new(table, power_labels(generator, n))
    }

    /// The symmetric group on `n` points; elements in lexicographic order of
    /// one-line notation, product `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTable("symmetric group on 0 points".into()));
        }
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|s| {
                perms
                    .iter()
                    .map(|t| index(&t.iter().map(|&i| s[i]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        let labels = perms
            .iter()
            .map(|p| format!("[{}]", p.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        CayleyTable::new(table, labels)
    }

    pub fn direct_product(&self, other: &CayleyTable) -> CayleyTable {
        let m = other.order();
        let n = self.order() * m;
        let table = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.table[i / m][j / m] * m + other.table[i % m][j % m])
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .iter()
            .flat_map(|a| other.labels.iter().map(move |b| format!("({a},{b})")))
            .collect();
        CayleyTable {
            table,
            identity: self.identity * m + other.identity,
            labels,
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order())
            .find(|&b| self.table[a][b] == self.identity)
            .expect("validated table has inverses")
    }
}

fn power_labels(generator: &str, n: usize) -> Vec<String> {
    (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => generator.to_string(),
            _ => format!("{generator}^{i}"),
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|i| if i >= first { i + 1 } else { i }));
            out.push(p);
        }
    }
    out
}

/// The group algebra `k[G]`: `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(field: Field, t: &CayleyTable) -> Result<HopfAlgebraData> {
    let n = t.order();
    let one = field.one();
    let mult = SparseMatrix::from_triples(
        field,
        n,
        n * n,
        (0..n * n).map(|c| (t.mul(c / n, c % n), c, one.clone())),
    )?;
    let unit = SparseMatrix::from_triples(field, n, 1, [(t.identity(), 0, one.clone())])?;
    let delta = SparseMatrix::from_triples(field, n * n, n, (0..n).map(|g| (g * n + g, g, one.clone())))?;
    let counit = SparseMatrix::from_triples(field, 1, n, (0..n).map(|g| (0, g, one.clone())))?;
    let antipode = SparseMatrix::from_triples(field, n, n, (0..n).map(|g| (t.inverse(g), g, one.clone())))?;
    let coalgebra = CoalgebraData::new(t.labels().to_vec(), delta, counit)?;
    HopfAlgebraData::new(coalgebra, mult, unit, antipode)
}

/// `k[C_n]` with generator `g`.
pub fn cyclic_group_algebra(field: Field, n: usize) -> Result<HopfAlgebraData> {
    group_algebra(field, &CayleyTable::cyclic(n, "g")?)
}

/// `k[C_n]` with a named generator.
pub fn cyclic_group_algebra_named(field: Field, n: usize, generator: &str) -> Result<HopfAlgebraData> {
    group_algebra(field, &CayleyTable::cyclic(n, generator)?)
}

pub fn symmetric_group_algebra(field: Field, n: usize) -> Result<HopfAlgebraData> {
    group_algebra(field, &CayleyTable::symmetric(n)?)
}

/// `b^i ▷ a^j`, as the exponent of `a`; row `i`, column `j`.
pub const C3_C6_LEFT: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [0, 1, 2],
    [0, 2, 1],
    [0, 1, 2],
    [0, 2, 1],
];

/// `b^i ◁ a^j`, as the exponent of `b`; row `i`, column `j`.
pub const C3_C6_RIGHT: [[usize; 3]; 6] = [
    [0, 0, 0],
    [1, 3, 5],
    [2, 2, 2],
    [3, 5, 1],
    [4, 4, 4],
    [5, 1, 3],
];

/// The matched pair `(k[C_3], k[C_6], ◁, ▷)` with generators `a` of `C_3` and `b` of `C_6`.
pub fn c3_c6_matched_pair(field: Field) -> Result<MatchedPair> {
    let a = Arc::new(cyclic_group_algebra_named(field, 3, "a")?);
    let h = Arc::new(cyclic_group_algebra_named(field, 6, "b")?);
    let all = ActionKind::ALL;
    let left = LinearAction::from_fn(Side::Left, h.clone(), a.clone(), all, |i, j| {
        vec![(C3_C6_LEFT[i][j], field.one())]
    })?;
    let right = LinearAction::from_fn(Side::Right, a, h, [ActionKind::ModuleCoalgebra], |j, i| {
        vec![(C3_C6_RIGHT[i][j], field.one())]
    })?;
    MatchedPair::new(right, left)
}

/// Index of `g^p x^q` in the basis `[1, g, x, gx]`.
fn h4_index(p: usize, q: usize) -> usize {
    p + 2 * q
}

/// Sweedler's four-dimensional Hopf algebra on the basis `[1, g, x, gx]`.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebraData> {
    if field.characteristic() == 2 {
        return Err(Error::CharacteristicTwo("Sweedler's H4".into()));
    }
    let one = field.one();
    let neg = -field.one();
    let mut mult = Vec::new();
    // (g^p x^q)(g^r x^s) = (−1)^{qr} g^{p+r} x^{q+s}
    for (p, q) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        for (r, s) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            if q + s >= 2 {
                continue;
            }
            let sign = if q * r == 1 { neg.clone() } else { one.clone() };
            let col = h4_index(p, q) * 4 + h4_index(r, s);
            mult.push((h4_index((p + r) % 2, q + s), col, sign));
        }
    }
    let mult = SparseMatrix::from_triples(field, 4, 16, mult)?;
    let unit = SparseMatrix::from_triples(field, 4, 1, [(0, 0, one.clone())])?;
    // Δ(1) = 1⊗1, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx
    let delta = SparseMatrix::from_triples(
        field,
        16,
        4,
        [
            (0, 0, one.clone()),
            (5, 1, one.clone()),
            (2 * 4, 2, one.clone()),
            (4 + 2, 2, one.clone()),
            (3 * 4 + 1, 3, one.clone()),
            (3, 3, one.clone()),
        ],
    )?;
    let counit = SparseMatrix::from_triples(field, 1, 4, [(0, 0, one.clone()), (0, 1, one.clone())])?;
    // S(1) = 1, S(g) = g, S(x) = −gx, S(gx) = x
    let antipode = SparseMatrix::from_triples(
        field,
        4,
        4,
        [(0, 0, one.clone()), (1, 1, one.clone()), (3, 2, neg), (2, 3, one)],
    )?;
    let labels = ["1", "g", "x", "gx"].map(String::from).to_vec();
    HopfAlgebraData::new(CoalgebraData::new(labels, delta, counit)?, mult, unit, antipode)
}

/// The two left `k[C_n]`-actions on H4: `c^i ▷ x = ω^i x`, `c^i ▶ x = λ^i x`, fixing `1` and `g`.
pub fn cn_actions_on_h4(
    field: Field,
    n: usize,
    omega: &Scalar,
    lambda: &Scalar,
) -> Result<(LinearAction, LinearAction)> {
    for (name, w) in [("omega", omega), ("lambda", lambda)] {
        if w.field() != field {
            return Err(Error::FieldMismatch(field, w.field()));
        }
        if !w.pow(n as u64).is_one() {
            return Err(Error::NotRootOfUnity {
                name: format!("{name} = {w}"),
                n: n as u64,
            });
        }
    }
    let cn = Arc::new(cyclic_group_algebra_named(field, n, "c")?);
    let h4 = Arc::new(sweedler_h4(field)?);
    let act = |w: &Scalar| {
        let w = w.clone();
        LinearAction::from_fn(Side::Left, cn.clone(), h4.clone(), ActionKind::ALL, move |i, j| {
            let coeff = if j >= 2 { w.pow(i as u64) } else { field.one() };
            vec![(j, coeff)]
        })
    };
    Ok((act(omega)?, act(lambda)?))
}

/// An `F_p`-order-`n` element search helper: the smallest `w` with `w^n = 1` and
/// `w^k ≠ 1` for `0 < k < n`, if one exists.
pub fn primitive_root_of_unity(field: Field, n: usize) -> Option<Scalar> {
    let p = match field {
        Field::Prime(p) => p,
        Field::Rational => {
            return match n {
                1 => Some(field.one()),
                2 => Some(field.int(-1)),
                _ => None,
            }
        }
    };
    (1..p).map(|v| field.int(v as i64)).find(|w| {
        w.pow(n as u64).is_one() && (1..n).all(|k| !w.pow(k as u64).is_one())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_hopf;

    const Q: Field = Field::Rational;

    #[test]
    fn cayley_validation() {
        assert!(CayleyTable::new(vec![vec![0, 1], vec![1, 1]], vec!["e".into(), "g".into()]).is_err());
        // Latin square with identity but not associative (order 5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = (0..5).map(|i| i.to_string()).collect();
        assert!(matches!(CayleyTable::new(loop5, labels), Err(Error::InvalidTable(_))));
        assert!(CayleyTable::cyclic(0, "g").is_err());
    }

    #[test]
    fn group_algebras() {
        let k = cyclic_group_algebra(Q, 1).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(verify_hopf(&k).all_passed());
        let c6 = cyclic_group_algebra_named(Q, 6, "b").unwrap();
        // S(b) = b⁵
        assert_eq!(c6.antipode().column(1), &[(5, Q.one())]);
        // b³·b⁴ = b
        assert_eq!(c6.mult().column(3 * 6 + 4), &[(1, Q.one())]);
        let c3 = cyclic_group_algebra_named(Q, 3, "a").unwrap();
        assert_eq!(c3.antipode().column(1), &[(2, Q.one())]);
        let s3 = symmetric_group_algebra(Q, 3).unwrap();
        assert_eq!(s3.dim(), 6);
        assert!(verify_hopf(&s3).all_passed());
        assert!(!s3.is_commutative());
        assert!(s3.is_cocommutative());
    }

    #[test]
    fn c3_c6_table_cells() {
        let mp = c3_c6_matched_pair(Q).unwrap();
        // b ▷ a = a²
        assert_eq!(mp.left().act_basis(1, 1), vec![(2, Q.one())]);
        // b² ◁ a² = b²
        assert_eq!(mp.right().act_basis(2, 2), vec![(2, Q.one())]);
        // b ◁ a² = b⁵
        assert_eq!(mp.right().act_basis(2, 1), vec![(5, Q.one())]);
        // b ◁ a = b³
        assert_eq!(mp.right().act_basis(1, 1), vec![(3, Q.one())]);
        for i in 0..6 {
            for j in 0..3 {
                let even = i % 2 == 0;
                assert_eq!(C3_C6_LEFT[i][j], if even { j } else { (2 * j) % 3 });
                assert_eq!(C3_C6_RIGHT[i][j], if even { i } else { (i + 2 * j) % 6 });
            }
        }
    }

    #[test]
    fn h4_presentation() {
        let h4 = sweedler_h4(Q).unwrap();
        assert!(verify_hopf(&h4).all_passed());
        assert!(!h4.is_cocommutative());
        // x·g = −gx
        assert_eq!(h4.mult().column(2 * 4 + 1), &[(3, Q.int(-1))]);
        // S(x) = −gx, S²(x) = −x
        assert_eq!(h4.antipode().column(2), &[(3, Q.int(-1))]);
        let s2 = h4.antipode().mul(h4.antipode()).unwrap();
        assert_eq!(s2.column(2), &[(2, Q.int(-1))]);
        assert!(matches!(
            sweedler_h4(Field::prime(2).unwrap()),
            Err(Error::CharacteristicTwo(_))
        ));
    }

    #[test]
    fn cn_actions_validate_roots() {
        let f5 = Field::prime(5).unwrap();
        assert!(cn_actions_on_h4(f5, 4, &f5.int(2), &f5.int(3)).is_ok());
        assert!(matches!(
            cn_actions_on_h4(Q, 3, &Q.int(-1), &Q.one()),
            Err(Error::NotRootOfUnity { .. })
        ));
        assert!(cn_actions_on_h4(Q, 2, &Q.int(-1), &Q.int(2)).is_err());
        assert_eq!(primitive_root_of_unity(f5, 4), Some(f5.int(2)));
        assert_eq!(primitive_root_of_unity(Q, 3), None);
    }
}
