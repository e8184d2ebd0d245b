//! The graded algebras `A_i = k[x_1..x_i]/(x_j^p)`, the wreath products
//! `A_i^{⊗d} ⋊ kΣ_d`, idempotents of `kΣ_d` and the corner algebras
//! `e (A_i^{⊗d} ⋊ kΣ_d) e`.
//!
//! Every basis element has even degree, so the wreath product needs no
//! Koszul signs; [`GradedStructAlgebra::check_grading`] confirms the
//! structure constants are homogeneous.

mod perm;

use std::collections::BTreeMap;

pub use perm::{character, factorial, SymmetricGroup};

use crate::error::{Error, Result};
use crate::exec;
use crate::partitions::{is_basic, Partition};
use crate::primefield::{self as pf, check_prime, Subspace};
use crate::schur::{AlgebraDump, StructAlgebra};
use crate::symchar::GradedDim;

/// A [`StructAlgebra`] with a degree for each basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedStructAlgebra {
    pub algebra: StructAlgebra,
    pub degrees: Vec<i64>,
}

impl GradedStructAlgebra {
    pub fn graded_dim(&self) -> GradedDim {
        GradedDim::from_pairs(self.degrees.iter().map(|&d| (d, 1)))
    }

    /// Every degree is even and `b_i b_j` only involves degree `deg i + deg j`.
    pub fn check_grading(&self) -> Result<()> {
        if let Some(d) = self.degrees.iter().find(|d| *d % 2 != 0) {
            return Err(Error::Invariant(format!("odd degree {d} would need Koszul signs")));
        }
        let n = self.algebra.dim();
        for i in 0..n {
            for j in 0..n {
                for &(k, _) in self.algebra.product(i, j) {
                    if self.degrees[k as usize] != self.degrees[i] + self.degrees[j] {
                        return Err(Error::Invariant(format!("product b{i} b{j} is not homogeneous")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dump(&self) -> AlgebraDump {
        self.algebra.dump(Some(self.degrees.clone()))
    }
}

fn pow_usize(p: u32, i: u32) -> usize {
    (p as usize).pow(i)
}

/// Product of monomials `t, u` of `A_i` (base-`p` exponent digits), or
/// `None` if some exponent reaches `p`.
#[inline]
pub fn monomial_mul(p: u32, t: usize, u: usize) -> Option<usize> {
    let p = p as usize;
    let (mut a, mut b) = (t, u);
    while a > 0 || b > 0 {
        if a % p + b % p >= p {
            return None;
        }
        a /= p;
        b /= p;
    }
    Some(t + u)
}

fn monomial_label(p: u32, i: u32, t: usize) -> String {
    let mut parts = Vec::new();
    let mut r = t;
    for j in 1..=i {
        let e = r % p as usize;
        r /= p as usize;
        match e {
            0 => {}
            1 => parts.push(format!("x{j}")),
            e => parts.push(format!("x{j}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

/// `A_i` on its monomial basis; monomial `t` has degree `2t`.
pub fn algebra_ai(p: u32, i: u32) -> Result<GradedStructAlgebra> {
    check_prime(p)?;
    if i == 0 {
        return Err(Error::InvalidArgument("i must be at least 1".into()));
    }
    let n = pow_usize(p, i);
    let mut products = vec![Vec::new(); n * n];
    for t in 0..n {
        for u in 0..n {
            if let Some(v) = monomial_mul(p, t, u) {
                products[t * n + u].push((v as u32, 1));
            }
        }
    }
    let labels = (0..n).map(|t| monomial_label(p, i, t)).collect();
    let mut identity = vec![0; n];
    identity[0] = 1;
    Ok(GradedStructAlgebra {
        algebra: StructAlgebra::from_products(p, labels, products, identity)?,
        degrees: (0..n as i64).map(|t| 2 * t).collect(),
    })
}

/// `A_i^{⊗d} ⋊ F_p Σ_d` on the basis `(m, σ)`, indexed `tuple * d! + σ`,
/// with `(m, σ)(m', σ') = (m · σ(m'), σσ')`.
#[derive(Clone, Debug)]
pub struct Wreath {
    pub p: u32,
    pub i: u32,
    pub d: usize,
    pub group: SymmetricGroup,
    /// `p^i`, the dimension of `A_i`.
    pub base: usize,
    tuples: usize,
}

impl Wreath {
    pub fn new(p: u32, i: u32, d: usize, max_dim: usize) -> Result<Self> {
        check_prime(p)?;
        if d == 0 || i == 0 {
            return Err(Error::InvalidArgument("d and i must be positive".into()));
        }
        let base = pow_usize(p, i);
        let tuples = (base as u128).pow(d as u32);
        let dim = tuples * factorial(d) as u128;
        if dim > max_dim as u128 {
            return Err(Error::cap("wreath product dimension", dim, max_dim as u128));
        }
        Ok(Wreath {
            p,
            i,
            d,
            group: SymmetricGroup::new(d),
            base,
            tuples: tuples as usize,
        })
    }

    pub fn dim(&self) -> usize {
        self.tuples * self.group.order()
    }

    pub fn tuple(&self, mut idx: usize) -> Vec<usize> {
        let mut m = vec![0; self.d];
        for k in (0..self.d).rev() {
            m[k] = idx % self.base;
            idx /= self.base;
        }
        m
    }

    pub fn tuple_index(&self, m: &[usize]) -> usize {
        m.iter().fold(0, |acc, &x| acc * self.base + x)
    }

    pub fn degree(&self, basis: usize) -> i64 {
        2 * self.tuple(basis / self.group.order()).iter().sum::<usize>() as i64
    }

    /// Product of two basis elements.
    pub fn mul_basis(&self, a: usize, b: usize) -> Option<usize> {
        let g = self.group.order();
        let (m, s) = (self.tuple(a / g), a % g);
        let (m2, s2) = (self.tuple(b / g), b % g);
        let moved = self.group.act_on_tuple(s, &m2);
        let mut prod = Vec::with_capacity(self.d);
        for (x, y) in m.iter().zip(&moved) {
            prod.push(monomial_mul(self.p, *x, *y)?);
        }
        Some(self.tuple_index(&prod) * g + self.group.compose(s, s2))
    }

    /// Embedding of a group-algebra element `Σ c_σ (1, σ)`.
    pub fn from_group_algebra(&self, x: &[u32]) -> BTreeMap<usize, u32> {
        x.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(s, &c)| (s, c))
            .collect()
    }

    /// Product of sparse elements.
    pub fn mul(&self, x: &BTreeMap<usize, u32>, y: &BTreeMap<usize, u32>) -> BTreeMap<usize, u32> {
        let p = self.p;
        let mut out: BTreeMap<usize, u32> = BTreeMap::new();
        for (&a, &ca) in x {
            for (&b, &cb) in y {
                if let Some(c) = self.mul_basis(a, b) {
                    let e = out.entry(c).or_insert(0);
                    *e = pf::add(p, *e, pf::mul(p, ca, cb));
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// The full algebra with structure constants.
    pub fn to_graded_algebra(&self) -> Result<GradedStructAlgebra> {
        let n = self.dim();
        let g = self.group.order();
        let products = (0..n * n)
            .map(|ab| {
                self.mul_basis(ab / n, ab % n)
                    .map(|c| vec![(c as u32, 1)])
                    .unwrap_or_default()
            })
            .collect();
        let labels = (0..n)
            .map(|b| {
                let m: Vec<String> = self
                    .tuple(b / g)
                    .iter()
                    .map(|&t| monomial_label(self.p, self.i, t))
                    .collect();
                format!("({})·{:?}", m.join(" ⊗ "), self.group.elem(b % g))
            })
            .collect();
        let mut identity = vec![0; n];
        identity[0] = 1;
        Ok(GradedStructAlgebra {
            algebra: StructAlgebra::from_products(self.p, labels, products, identity)?,
            degrees: (0..n).map(|b| self.degree(b)).collect(),
        })
    }

    /// Σ_d-orbits of monomial tuples, as sorted representatives with their members.
    fn tuple_orbits(&self) -> Vec<Vec<usize>> {
        let mut orbits: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for t in 0..self.tuples {
            let mut key = self.tuple(t);
            key.sort_unstable();
            orbits.entry(key).or_default().push(t);
        }
        orbits.into_values().collect()
    }
}

/// `A_i^{⊗d} ⋊ F_p Σ_d` with full structure constants, refused above `max_dim`.
pub fn wreath_product(p: u32, i: u32, d: usize, max_dim: usize) -> Result<GradedStructAlgebra> {
    Wreath::new(p, i, d, max_dim)?.to_graded_algebra()
}

/// Rational `χ_λ(1) χ_λ(σ) / d!` reduced into `F_p`.
fn central_coefficient(lambda: &Partition, ct: &Partition, p: u32, d: usize) -> Result<u32> {
    let dim = character(lambda, &Partition::from_unsorted(vec![1; d]));
    let mut num = dim * character(lambda, ct);
    let mut den = factorial(d) as i64;
    let g = gcd(num.unsigned_abs(), den as u64) as i64;
    if g > 1 {
        num /= g;
        den /= g;
    }
    if den % p as i64 == 0 {
        return Err(Error::NonIntegralCharacter(lambda.clone(), p));
    }
    Ok(pf::mul(p, pf::reduce(p, num), pf::inv(p, pf::reduce(p, den))))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

/// Central block idempotent `(χ_λ(1)/d!) Σ_σ χ_λ(σ^{-1}) σ` of `F_p Σ_d`.
///
/// Fails with [`Error::NonIntegralCharacter`] unless the block of `λ` has
/// defect zero. Postconditions `e² = e` and `dim F_pΣ_d e = χ_λ(1)²` are checked.
pub fn defect_zero_idempotent(lambda: &Partition, p: u32) -> Result<Vec<u32>> {
    check_prime(p)?;
    let d = lambda.weight();
    let g = SymmetricGroup::new(d);
    let mut e = vec![0u32; g.order()];
    for (s, slot) in e.iter_mut().enumerate() {
        // Characters of Σ_d are real, so χ(σ^{-1}) = χ(σ).
        *slot = central_coefficient(lambda, &g.cycle_type(s), p, d)?;
    }
    let dim = character(lambda, &Partition::from_unsorted(vec![1; d])) as usize;
    if g.algebra_mul(p, &e, &e) != e || g.left_ideal_dim(p, &e) != dim * dim {
        return Err(Error::Invariant(format!("central idempotent of {lambda} fails its checks")));
    }
    Ok(e)
}

/// Normalised Young symmetrizer `h_λ^{-1} (Σ_{rows} r)(Σ_{cols} sgn(c) c)`
/// for the row-reading tableau: a primitive idempotent with
/// `F_pΣ_d e` of dimension `χ_λ(1)`. Requires `p ∤ h_λ = Π hooks`.
pub fn primitive_idempotent(lambda: &Partition, p: u32) -> Result<Vec<u32>> {
    check_prime(p)?;
    let d = lambda.weight();
    let g = SymmetricGroup::new(d);
    let hooks: u64 = lambda.hook_lengths().iter().map(|&h| h as u64).product();
    if hooks % p as u64 == 0 {
        return Err(Error::NonIntegralCharacter(lambda.clone(), p));
    }
    let mut row_of = Vec::with_capacity(d);
    let mut col_of = Vec::with_capacity(d);
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            row_of.push(r);
            col_of.push(c);
        }
    }
    let n = g.order();
    let preserves = |s: usize, key: &[usize]| g.elem(s).iter().enumerate().all(|(k, &t)| key[k] == key[t as usize]);
    let mut rows = vec![0u32; n];
    let mut cols = vec![0u32; n];
    for s in 0..n {
        if preserves(s, &row_of) {
            rows[s] = 1;
        }
        if preserves(s, &col_of) {
            cols[s] = if g.sign(s) { p - 1 } else { 1 };
        }
    }
    let y = g.algebra_mul(p, &rows, &cols);
    let hinv = pf::inv(p, (hooks % p as u64) as u32);
    let e: Vec<u32> = y.iter().map(|&c| pf::mul(p, c, hinv)).collect();
    let dim = character(lambda, &Partition::from_unsorted(vec![1; d])) as usize;
    if g.algebra_mul(p, &e, &e) != e || g.left_ideal_dim(p, &e) != dim {
        return Err(Error::Invariant(format!("Young symmetrizer of {lambda} fails its checks")));
    }
    Ok(e)
}

/// Which idempotent of `F_pΣ_d` cuts the corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentKind {
    /// Young symmetrizer; `S_λ = e I^{⊗d}` and the corner is `A_{i,λ}`.
    Primitive,
    /// Central block idempotent; its corner is `χ_λ(1) × χ_λ(1)` matrices over `A_{i,λ}`.
    Central,
}

/// The corner `e W e` of the wreath product.
#[derive(Clone, Debug)]
pub struct Corner {
    pub lambda: Partition,
    pub kind: IdempotentKind,
    pub graded_dim: GradedDim,
    /// Basis and structure constants, present when the wreath product is
    /// below the structure-constant cap.
    pub algebra: Option<GradedStructAlgebra>,
}

/// Per-orbit data: the orbit's basis indices in `W` and the image of `x ↦ e x e`.
struct OrbitCorner {
    members: Vec<usize>,
    degree: i64,
    image: Subspace,
}

/// Caps for [`corner_algebra`].
#[derive(Clone, Copy, Debug)]
pub struct CornerCaps {
    /// Bound on `dim W` for computing the graded dimension at all.
    pub max_wreath_dim: usize,
    /// Bound on `dim W` for also building structure constants.
    pub max_structure_dim: usize,
}

impl Default for CornerCaps {
    fn default() -> Self {
        CornerCaps {
            max_wreath_dim: 2_000_000,
            max_structure_dim: 20_000,
        }
    }
}

pub fn corner_algebra(lambda: &Partition, p: u32, i: u32, kind: IdempotentKind, caps: &CornerCaps) -> Result<Corner> {
    if !is_basic(lambda, p) {
        return Err(Error::NotBasic(lambda.clone(), p));
    }
    let d = lambda.weight();
    let w = Wreath::new(p, i, d, caps.max_wreath_dim)?;
    let e_group = match kind {
        IdempotentKind::Primitive => primitive_idempotent(lambda, p)?,
        IdempotentKind::Central => defect_zero_idempotent(lambda, p)?,
    };
    let e_terms: Vec<(usize, u32)> = e_group
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(s, &c)| (s, c))
        .collect();
    let g = w.group.order();
    let orbits = w.tuple_orbits();

    // e (m, σ) e = Σ c_τ c_τ' (τ(m), τστ'); stays within the orbit of m.
    let per_orbit: Vec<OrbitCorner> = exec::map(&orbits, |tuples| {
        let members: Vec<usize> = tuples
            .iter()
            .flat_map(|&t| (0..g).map(move |s| t * g + s))
            .collect();
        let local: BTreeMap<usize, usize> = members.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let mut rows = Vec::with_capacity(members.len());
        for &b in &members {
            let (t, s) = (b / g, b % g);
            let m = w.tuple(t);
            let mut v = vec![0u32; members.len()];
            for &(tau, c1) in &e_terms {
                let moved = w.tuple_index(&w.group.act_on_tuple(tau, &m));
                let ts = w.group.compose(tau, s);
                for &(tau2, c2) in &e_terms {
                    let idx = local[&(moved * g + w.group.compose(ts, tau2))];
                    v[idx] = pf::add(p, v[idx], pf::mul(p, c1, c2));
                }
            }
            rows.push(v);
        }
        OrbitCorner {
            degree: w.degree(members[0]),
            image: Subspace::span(p, members.len(), &rows),
            members,
        }
    });

    let mut graded_dim = GradedDim::zero();
    for oc in &per_orbit {
        graded_dim.add_term(oc.degree, oc.image.dim() as u64);
    }
    let algebra = if w.dim() <= caps.max_structure_dim {
        Some(corner_structure(&w, &per_orbit, &e_group)?)
    } else {
        None
    };
    Ok(Corner {
        lambda: lambda.clone(),
        kind,
        graded_dim,
        algebra,
    })
}

fn corner_structure(w: &Wreath, per_orbit: &[OrbitCorner], e_group: &[u32]) -> Result<GradedStructAlgebra> {
    let p = w.p;
    // Corner basis: per orbit, the echelon basis of its image, as sparse W-vectors.
    let mut basis: Vec<BTreeMap<usize, u32>> = Vec::new();
    let mut degrees = Vec::new();
    let mut orbit_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut first_index = Vec::with_capacity(per_orbit.len());
    for (o, oc) in per_orbit.iter().enumerate() {
        first_index.push(basis.len());
        for &b in &oc.members {
            orbit_of.insert(b, o);
        }
        for v in oc.image.basis() {
            basis.push(
                v.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| (oc.members[k], c))
                    .collect(),
            );
            degrees.push(oc.degree);
        }
    }
    let n = basis.len();
    let coords = |x: &BTreeMap<usize, u32>| -> Result<Vec<(u32, u32)>> {
        let mut by_orbit: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for (&b, &c) in x {
            let o = orbit_of[&b];
            let oc = &per_orbit[o];
            let local = by_orbit.entry(o).or_insert_with(|| vec![0; oc.members.len()]);
            let k = oc.members.binary_search(&b).expect("member");
            local[k] = c;
        }
        let mut out = Vec::new();
        for (o, v) in by_orbit {
            let c = per_orbit[o]
                .image
                .coords(&v)
                .ok_or_else(|| Error::Invariant("corner product leaves the corner".into()))?;
            for (k, x) in c.into_iter().enumerate() {
                if x != 0 {
                    out.push(((first_index[o] + k) as u32, x));
                }
            }
        }
        Ok(out)
    };
    let products = exec::map_range(n * n, |ab| coords(&w.mul(&basis[ab / n], &basis[ab % n])));
    let products = products.into_iter().collect::<Result<Vec<_>>>()?;
    let identity_vec = w.from_group_algebra(e_group);
    let identity: Vec<u32> = {
        let c = coords(&identity_vec)?;
        let mut v = vec![0; n];
        for (k, x) in c {
            v[k as usize] = x;
        }
        v
    };
    let labels = (0..n).map(|k| format!("c{k}")).collect();
    Ok(GradedStructAlgebra {
        algebra: StructAlgebra::from_products(p, labels, products, identity)?,
        degrees,
    })
}
