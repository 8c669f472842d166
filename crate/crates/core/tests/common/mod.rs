//! Dense reference checks written directly against the structure constants.
//! Nothing here goes through the slot-map pipeline of the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use hopfbrace::{Field, HopfAlgebraData, HopfBraceData, LinearAction, MatchedPair, Scalar, SparseMatrix};

pub type V = BTreeMap<usize, Scalar>;
pub type V2 = BTreeMap<(usize, usize), Scalar>;

fn push(v: &mut V, i: usize, x: Scalar) {
    let e = v.entry(i).or_insert_with(|| x.field().zero());
    *e += &x;
    if e.is_zero() {
        v.remove(&i);
    }
}

fn push2(v: &mut V2, i: (usize, usize), x: Scalar) {
    let e = v.entry(i).or_insert_with(|| x.field().zero());
    *e += &x;
    if e.is_zero() {
        v.remove(&i);
    }
}

pub fn e(f: Field, i: usize) -> V {
    BTreeMap::from([(i, f.one())])
}

pub fn column(m: &SparseMatrix, c: usize) -> V {
    m.column(c).iter().cloned().collect()
}

pub fn scale(v: &V, s: &Scalar) -> V {
    let mut out = V::new();
    for (i, x) in v {
        push(&mut out, *i, x * s);
    }
    out
}

pub fn add(u: &V, v: &V) -> V {
    let mut out = u.clone();
    for (i, x) in v {
        push(&mut out, *i, x.clone());
    }
    out
}

/// Dense copy of a Hopf algebra.
pub struct Dense {
    pub field: Field,
    pub d: usize,
    pub mult: Vec<Vec<V>>,
    pub delta: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Vec<Scalar>,
    pub unit: V,
    pub antipode: Vec<V>,
}

impl Dense {
    pub fn new(h: &HopfAlgebraData) -> Self {
        let d = h.dim();
        let field = h.field();
        let mult = (0..d)
            .map(|i| (0..d).map(|j| column(h.mult(), i * d + j)).collect())
            .collect();
        let delta = (0..d)
            .map(|i| {
                h.delta()
                    .column(i)
                    .iter()
                    .map(|(kl, c)| (kl / d, kl % d, c.clone()))
                    .collect()
            })
            .collect();
        Dense {
            field,
            d,
            mult,
            delta,
            counit: (0..d).map(|i| h.counit().get(0, i)).collect(),
            unit: column(h.unit(), 0),
            antipode: (0..d).map(|i| column(h.antipode(), i)).collect(),
        }
    }

    pub fn mul(&self, u: &V, v: &V) -> V {
        let mut out = V::new();
        for (i, x) in u {
            for (j, y) in v {
                let c = x * y;
                for (r, m) in &self.mult[*i][*j] {
                    push(&mut out, *r, &c * m);
                }
            }
        }
        out
    }

    pub fn s(&self, u: &V) -> V {
        let mut out = V::new();
        for (i, x) in u {
            for (r, m) in &self.antipode[*i] {
                push(&mut out, *r, x * m);
            }
        }
        out
    }

    pub fn eps(&self, u: &V) -> Scalar {
        let mut acc = self.field.zero();
        for (i, x) in u {
            acc += &(x * &self.counit[*i]);
        }
        acc
    }

    pub fn comul(&self, u: &V) -> V2 {
        let mut out = V2::new();
        for (i, x) in u {
            for (k, l, c) in &self.delta[*i] {
                push2(&mut out, (*k, *l), x * c);
            }
        }
        out
    }

    /// Terms `(c, x₁, x₂, x₃)` of the double coproduct of a basis vector.
    pub fn delta3(&self, i: usize) -> Vec<(Scalar, usize, usize, usize)> {
        let mut out = Vec::new();
        for (k, l, c) in &self.delta[i] {
            for (m, n, c2) in &self.delta[*l] {
                out.push((c * c2, *k, *m, *n));
            }
        }
        out
    }

    pub fn e(&self, i: usize) -> V {
        e(self.field, i)
    }
}

/// Names of the failing Hopf axioms, in the library's naming.
pub fn hopf_failures(h: &HopfAlgebraData) -> Vec<&'static str> {
    let h = Dense::new(h);
    let (d, f) = (h.d, h.field);
    let mut fails = Vec::new();
    let mut flag = |name: &'static str, ok: bool| {
        if !ok && !fails.contains(&name) {
            fails.push(name);
        }
    };
    for i in 0..d {
        let mut l: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        let mut r = l.clone();
        for (k, m, c) in &h.delta[i] {
            for (a, b, c2) in &h.delta[*k] {
                let e = l.entry((*a, *b, *m)).or_insert_with(|| f.zero());
                *e += &(c * c2);
            }
            for (a, b, c2) in &h.delta[*m] {
                let e = r.entry((*k, *a, *b)).or_insert_with(|| f.zero());
                *e += &(c * c2);
            }
        }
        l.retain(|_, x| !x.is_zero());
        r.retain(|_, x| !x.is_zero());
        flag("coassociativity", l == r);
        let mut lc = V::new();
        let mut rc = V::new();
        for (k, m, c) in &h.delta[i] {
            lc = add(&lc, &scale(&h.e(*m), &(c * &h.counit[*k])));
            rc = add(&rc, &scale(&h.e(*k), &(c * &h.counit[*m])));
        }
        flag("left counit", lc == h.e(i));
        flag("right counit", rc == h.e(i));
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let l = h.mul(&h.mul(&h.e(i), &h.e(j)), &h.e(k));
                let r = h.mul(&h.e(i), &h.mul(&h.e(j), &h.e(k)));
                flag("associativity", l == r);
            }
        }
        flag("left unit", h.mul(&h.unit, &h.e(i)) == h.e(i));
        flag("right unit", h.mul(&h.e(i), &h.unit) == h.e(i));
    }
    for i in 0..d {
        for j in 0..d {
            let p = h.mul(&h.e(i), &h.e(j));
            let lhs = h.comul(&p);
            let mut rhs = V2::new();
            for (a, b, c) in &h.delta[i] {
                for (a2, b2, c2) in &h.delta[j] {
                    let x = h.mul(&h.e(*a), &h.e(*a2));
                    let y = h.mul(&h.e(*b), &h.e(*b2));
                    for (u, xu) in &x {
                        for (v, yv) in &y {
                            push2(&mut rhs, (*u, *v), &(c * c2) * &(xu * yv));
                        }
                    }
                }
            }
            flag("comultiplication multiplicative", lhs == rhs);
            flag("counit multiplicative", h.eps(&p) == &h.counit[i] * &h.counit[j]);
        }
    }
    let mut uu = V2::new();
    for (i, x) in &h.unit {
        for (j, y) in &h.unit {
            push2(&mut uu, (*i, *j), x * y);
        }
    }
    flag("comultiplication of unit", h.comul(&h.unit) == uu);
    flag("counit of unit", h.eps(&h.unit).is_one());
    for i in 0..d {
        let mut l = V::new();
        let mut r = V::new();
        for (a, b, c) in &h.delta[i] {
            l = add(&l, &scale(&h.mul(&h.s(&h.e(*a)), &h.e(*b)), c));
            r = add(&r, &scale(&h.mul(&h.e(*a), &h.s(&h.e(*b))), c));
        }
        let target = scale(&h.unit, &h.counit[i]);
        flag("left antipode", l == target);
        flag("right antipode", r == target);
    }
    fails
}

/// Failing brace axioms: the two Hopf structures, the units, and
/// `x∘(yz) = (x₁∘y)S(x₂)(x₃∘z)` on all basis triples.
pub fn brace_failures(b: &HopfBraceData) -> Vec<String> {
    let mut fails: Vec<String> = Vec::new();
    fails.extend(hopf_failures(b.dot()).into_iter().map(|n| format!("· {n}")));
    fails.extend(hopf_failures(b.circ()).into_iter().map(|n| format!("∘ {n}")));
    let (h, hc) = (Dense::new(b.dot()), Dense::new(b.circ()));
    if h.unit != hc.unit {
        fails.push("units coincide".into());
    }
    let d = h.d;
    'outer: for x in 0..d {
        let terms = h.delta3(x);
        for y in 0..d {
            for z in 0..d {
                let lhs = hc.mul(&h.e(x), &h.mul(&h.e(y), &h.e(z)));
                let mut rhs = V::new();
                for (c, x1, x2, x3) in &terms {
                    let t = h.mul(&h.mul(&hc.mul(&h.e(*x1), &h.e(y)), &h.s(&h.e(*x2))), &hc.mul(&h.e(*x3), &h.e(z)));
                    rhs = add(&rhs, &scale(&t, c));
                }
                if lhs != rhs {
                    fails.push("brace compatibility".into());
                    break 'outer;
                }
            }
        }
    }
    fails
}

/// Dense action table: `act(x, a)` with `x` in the actor and `a` in the target.
pub struct DenseAction {
    pub side_left: bool,
    pub p: usize,
    pub q: usize,
    pub table: Vec<Vec<V>>,
}

impl DenseAction {
    pub fn new(act: &LinearAction) -> Self {
        let (p, q) = (act.actor().dim(), act.target().dim());
        let left = act.side() == hopfbrace::Side::Left;
        let table = (0..p)
            .map(|x| {
                (0..q)
                    .map(|a| column(act.tensor(), if left { x * q + a } else { a * p + x }))
                    .collect()
            })
            .collect();
        DenseAction { side_left: left, p, q, table }
    }

    /// Bilinear extension; `actor` first regardless of side.
    pub fn act(&self, actor: &V, target: &V) -> V {
        let mut out = V::new();
        for (x, cx) in actor {
            for (a, ca) in target {
                for (r, v) in &self.table[*x][*a] {
                    push(&mut out, *r, &(cx * ca) * v);
                }
            }
        }
        out
    }
}

fn action_failures(act: &LinearAction, prefix: &str, fails: &mut Vec<String>) {
    let (h, a) = (Dense::new(act.actor()), Dense::new(act.target()));
    let t = DenseAction::new(act);
    let left = t.side_left;
    let mut flag = |name: &str, ok: bool| {
        let n = format!("{prefix}{name}");
        if !ok && !fails.contains(&n) {
            fails.push(n);
        }
    };
    for j in 0..t.q {
        flag("unital module", t.act(&h.unit, &a.e(j)) == a.e(j));
        for x in 0..t.p {
            for y in 0..t.p {
                // left: x▷(y▷a) = (xy)▷a; right: (a◁x)◁y = a◁(xy)
                let (outer, inner) = if left { (x, y) } else { (y, x) };
                let two = t.act(&h.e(outer), &t.act(&h.e(inner), &a.e(j)));
                let one = t.act(&h.mul(&h.e(x), &h.e(y)), &a.e(j));
                flag("associative module", two == one);
            }
            let img = t.act(&h.e(x), &a.e(j));
            let mut rhs = V2::new();
            for (x1, x2, c) in &h.delta[x] {
                for (a1, a2, c2) in &a.delta[j] {
                    let u = t.act(&h.e(*x1), &a.e(*a1));
                    let v = t.act(&h.e(*x2), &a.e(*a2));
                    for (i, ui) in &u {
                        for (k, vk) in &v {
                            push2(&mut rhs, (*i, *k), &(c * c2) * &(ui * vk));
                        }
                    }
                }
            }
            flag("action comultiplicative", a.comul(&img) == rhs);
            flag("action counital", a.eps(&img) == &h.counit[x] * &a.counit[j]);
        }
    }
}

/// Failing matched-pair axioms, named as the library names them.
pub fn matched_pair_failures(mp: &MatchedPair) -> Vec<String> {
    let mut fails = Vec::new();
    action_failures(mp.left(), "▷ ", &mut fails);
    action_failures(mp.right(), "◁ ", &mut fails);
    let (a, h) = (Dense::new(mp.a()), Dense::new(mp.h()));
    let (l, r) = (DenseAction::new(mp.left()), DenseAction::new(mp.right()));
    let mut flag = |name: &str, ok: bool| {
        if !ok && !fails.iter().any(|f| f == name) {
            fails.push(name.to_string());
        }
    };
    for x in 0..h.d {
        flag("mp1 x▷1 = ε(x)1", l.act(&h.e(x), &a.unit) == scale(&a.unit, &h.counit[x]));
    }
    for j in 0..a.d {
        flag("mp1 1◁a = ε(a)1", r.act(&a.e(j), &h.unit) == scale(&h.unit, &a.counit[j]));
    }
    for x in 0..h.d {
        for j in 0..a.d {
            for k in 0..a.d {
                let lhs = l.act(&h.e(x), &a.mul(&a.e(j), &a.e(k)));
                let mut rhs = V::new();
                for (x1, x2, c) in &h.delta[x] {
                    for (j1, j2, c2) in &a.delta[j] {
                        let u = l.act(&h.e(*x1), &a.e(*j1));
                        let w = r.act(&a.e(*j2), &h.e(*x2));
                        let v = l.act(&w, &a.e(k));
                        rhs = add(&rhs, &scale(&a.mul(&u, &v), &(c * c2)));
                    }
                }
                flag("mp2", lhs == rhs);
            }
        }
    }
    for x in 0..h.d {
        for y in 0..h.d {
            for j in 0..a.d {
                let lhs = r.act(&a.e(j), &h.mul(&h.e(x), &h.e(y)));
                let mut rhs = V::new();
                for (y1, y2, c) in &h.delta[y] {
                    for (j1, j2, c2) in &a.delta[j] {
                        let b = l.act(&h.e(*y1), &a.e(*j1));
                        let u = r.act(&b, &h.e(x));
                        let v = r.act(&a.e(*j2), &h.e(*y2));
                        rhs = add(&rhs, &scale(&h.mul(&u, &v), &(c * c2)));
                    }
                }
                flag("mp3", lhs == rhs);
            }
        }
    }
    for x in 0..h.d {
        for j in 0..a.d {
            let mut lhs = V2::new();
            let mut rhs = V2::new();
            for (x1, x2, c) in &h.delta[x] {
                for (j1, j2, c2) in &a.delta[j] {
                    let cc = c * c2;
                    for (pairs, (xa, ja, xb, jb)) in [(&mut lhs, (x1, j1, x2, j2)), (&mut rhs, (x2, j2, x1, j1))] {
                        let u = r.act(&a.e(*ja), &h.e(*xa));
                        let v = l.act(&h.e(*xb), &a.e(*jb));
                        for (i, ui) in &u {
                            for (k, vk) in &v {
                                push2(pairs, (*i, *k), &cc * &(ui * vk));
                            }
                        }
                    }
                }
            }
            flag("mp4", lhs == rhs);
        }
    }
    fails
}

/// Multiplication table of a Hopf algebra whose basis is closed under the product
/// (a group algebra in its group basis); panics otherwise.
pub fn group_table(h: &HopfAlgebraData) -> Vec<Vec<usize>> {
    let d = h.dim();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let col = h.mult().column(i * d + j);
                    assert_eq!(col.len(), 1, "product of basis elements is not a basis element");
                    assert!(col[0].1.is_one());
                    col[0].0
                })
                .collect()
        })
        .collect()
}

pub fn table_inverse(t: &[Vec<usize>], unit: usize, x: usize) -> usize {
    (0..t.len()).find(|&y| t[x][y] == unit).expect("group element has an inverse")
}

/// The matrix of a permutation of basis pairs `(x, y) ↦ (u, v)` on `V⊗V`.
pub fn pair_permutation(f: Field, d: usize, map: impl Fn(usize, usize) -> (usize, usize)) -> SparseMatrix {
    let triples = (0..d).flat_map(|x| (0..d).map(move |y| (x, y))).map(|(x, y)| {
        let (u, v) = map(x, y);
        (u * d + v, x * d + y, f.one())
    });
    SparseMatrix::from_triples(f, d * d, d * d, triples.collect::<Vec<_>>()).unwrap()
}
