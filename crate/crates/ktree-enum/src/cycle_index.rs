//! Two-sort cycle indices for k-trees, at reduced scale.
//!
//! This module carries out the same rooted/unrooted decomposition as
//! [`crate::gamma_gf`], but on full cycle indices instead of one-variable
//! generating functions: a [`CycleIndex`] is a sparse sum of monomials
//! p_π[x]·p_τ[y] with exact rational coefficients, where π tracks the cycle
//! structure of a permutation of hedron labels and τ of front labels.
//! Substituting p_i[x] → x^i, p_i[y] → 1 (see
//! [`CycleIndex::specialize_unlabeled`]) must reproduce the generating
//! functions of the fast engine — the strongest internal cross-check in the
//! crate — and extracting the coefficient of p_1^n[x]·p_1^w[y] yields
//! labeled counts.
//!
//! The term count grows roughly like p(D)·p(kD), so the builder enforces
//! configurable scale bounds ([`CiBounds`], default k ≤ 3, x-weight ≤ 8).
//! Memory, not time, is the practical constraint.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::{partitions_of, Partition};
use crate::series::Series;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CiError {
    #[error("cycle-index scale bounds exceeded: k={k}, x-weight {degree} (bounds: k <= {max_k}, x-weight <= {max_x_weight})")]
    BoundsExceeded { k: u32, degree: usize, max_k: u32, max_x_weight: usize },
    #[error("plethystic exp requires a zero x-weight-0 component")]
    NonzeroConstantTerm,
    #[error("partition {partition} has weight {got}, expected {expected}")]
    WrongWeight { partition: String, expected: u32, got: u32 },
    #[error("k must be >= 1, got {k}")]
    InvalidK { k: u32 },
}

/// Scale bounds for cycle-index construction. These are configuration, not
/// hard limits of the algorithm.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CiBounds {
    pub max_k: u32,
    pub max_x_weight: usize,
}

impl Default for CiBounds {
    fn default() -> Self {
        CiBounds { max_k: 3, max_x_weight: 8 }
    }
}

/// A truncated two-sort cycle index: sparse map from (π, τ) to a rational
/// coefficient, graded and truncated by x-weight |π|. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleIndex {
    terms: BTreeMap<(Partition, Partition), BigRational>,
    max_x_weight: usize,
}

impl CycleIndex {
    pub fn zero(max_x_weight: usize) -> Self {
        CycleIndex { terms: BTreeMap::new(), max_x_weight }
    }

    /// The empty monomial with coefficient 1.
    pub fn unit(max_x_weight: usize) -> Self {
        CycleIndex::monomial(max_x_weight, Partition::empty(), Partition::empty(), BigRational::one())
    }

    pub fn monomial(
        max_x_weight: usize,
        x_part: Partition,
        y_part: Partition,
        coeff: BigRational,
    ) -> Self {
        let mut terms = BTreeMap::new();
        if x_part.weight() as usize <= max_x_weight && !coeff.is_zero() {
            terms.insert((x_part, y_part), coeff);
        }
        CycleIndex { terms, max_x_weight }
    }

    /// The power sum p_i[x].
    pub fn x_power_sum(max_x_weight: usize, i: u32) -> Self {
        CycleIndex::monomial(max_x_weight, Partition::new(vec![i]), Partition::empty(), BigRational::one())
    }

    /// The power sum p_i[y].
    pub fn y_power_sum(max_x_weight: usize, i: u32) -> Self {
        CycleIndex::monomial(max_x_weight, Partition::empty(), Partition::new(vec![i]), BigRational::one())
    }

    pub fn max_x_weight(&self) -> usize {
        self.max_x_weight
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, x_part: &Partition, y_part: &Partition) -> BigRational {
        self.terms
            .get(&(x_part.clone(), y_part.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn insert(&mut self, key: (Partition, Partition), value: BigRational) {
        if key.0.weight() as usize > self.max_x_weight || value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(slot) => {
                slot.insert(value);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &CycleIndex) -> CycleIndex {
        assert_eq!(self.max_x_weight, other.max_x_weight, "truncation mismatch");
        let mut out = self.clone();
        for (key, value) in &other.terms {
            out.insert(key.clone(), value.clone());
        }
        out
    }

    pub fn sub(&self, other: &CycleIndex) -> CycleIndex {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, q: &BigRational) -> CycleIndex {
        if q.is_zero() {
            return CycleIndex::zero(self.max_x_weight);
        }
        CycleIndex {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * q)).collect(),
            max_x_weight: self.max_x_weight,
        }
    }

    /// Product: monomials merge part-multisets sortwise; terms whose x-weight
    /// exceeds the truncation are dropped.
    pub fn mul(&self, other: &CycleIndex) -> CycleIndex {
        assert_eq!(self.max_x_weight, other.max_x_weight, "truncation mismatch");
        let mut out = CycleIndex::zero(self.max_x_weight);
        for ((p1, t1), c1) in &self.terms {
            for ((p2, t2), c2) in &other.terms {
                if (p1.weight() + p2.weight()) as usize > self.max_x_weight {
                    continue;
                }
                let key = (merge_parts(p1, p2), merge_parts(t1, t2));
                out.insert(key, c1 * c2);
            }
        }
        out
    }

    /// Substitutes p_i ↦ p_{i·m} in both sorts: every part of every π and τ
    /// is multiplied by m. Terms pushed past the x-truncation are dropped.
    pub fn stretch(&self, m: u32) -> CycleIndex {
        assert!(m >= 1, "stretch factor must be >= 1");
        let mut out = CycleIndex::zero(self.max_x_weight);
        for ((p, t), c) in &self.terms {
            let stretched_x = Partition::new(p.parts().iter().map(|&v| v * m).collect());
            if stretched_x.weight() as usize > self.max_x_weight {
                continue;
            }
            let stretched_y = Partition::new(t.parts().iter().map(|&v| v * m).collect());
            out.insert((stretched_x, stretched_y), c.clone());
        }
        out
    }

    /// The homogeneous component of x-weight `w`.
    pub fn x_homogeneous(&self, w: usize) -> CycleIndex {
        CycleIndex {
            terms: self
                .terms
                .iter()
                .filter(|((p, _), _)| p.weight() as usize == w)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
            max_x_weight: self.max_x_weight,
        }
    }

    /// The cycle index of sets of self-structures: exp(Σ_{m≥1} stretch(self, m)/m),
    /// truncated by x-weight. Requires a zero x-weight-0 component.
    pub fn plethystic_exp(&self) -> Result<CycleIndex, CiError> {
        if self.terms.keys().any(|(p, _)| p.weight() == 0) {
            return Err(CiError::NonzeroConstantTerm);
        }
        let d = self.max_x_weight;
        let mut arg = CycleIndex::zero(d);
        for m in 1..=d.max(1) as u32 {
            let piece = self.stretch(m).scale(&BigRational::new(BigInt::one(), BigInt::from(m)));
            arg = arg.add(&piece);
        }
        // exp via Σ_j arg^j / j!; arg has minimum x-weight 1, so j ≤ d.
        let mut out = CycleIndex::unit(d);
        let mut term = CycleIndex::unit(d);
        for j in 1..=d.max(1) as u64 {
            term = term.mul(&arg).scale(&BigRational::new(BigInt::one(), BigInt::from(j)));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Substitutes p_i[x] → x^i and p_i[y] → 1, producing the one-variable
    /// generating function of unlabeled structures.
    pub fn specialize_unlabeled(&self) -> Series {
        let mut coeffs = vec![BigRational::zero(); self.max_x_weight + 1];
        for ((p, _), c) in &self.terms {
            coeffs[p.weight() as usize] += c;
        }
        Series::from_coeffs(coeffs)
    }

    /// Number of fully labeled structures with `x_weight` labels of the x
    /// sort and `y_weight` of the y sort: the coefficient of
    /// p_1^{x_weight}[x]·p_1^{y_weight}[y] times x_weight!·y_weight!.
    pub fn labeled_count(&self, x_weight: usize, y_weight: usize) -> BigRational {
        let px = Partition::new(vec![1; x_weight]);
        let py = Partition::new(vec![1; y_weight]);
        let mut scale = BigRational::one();
        for j in 1..=x_weight.max(y_weight) {
            if j <= x_weight {
                scale *= BigRational::from_integer(BigInt::from(j));
            }
            if j <= y_weight {
                scale *= BigRational::from_integer(BigInt::from(j));
            }
        }
        self.coefficient(&px, &py) * scale
    }

    /// Canonical text form: one term per line, sorted by (x-weight, π, τ),
    /// as `x=<parts> y=<parts> <num>/<den>` with `-` for the empty partition.
    pub fn canonical_text(&self) -> String {
        let mut keys: Vec<_> = self.terms.keys().collect();
        keys.sort_by_key(|(p, t)| (p.weight(), p.clone(), t.clone()));
        let mut out = String::new();
        for key in keys {
            let (p, t) = key;
            let c = &self.terms[key];
            let _ = writeln!(
                out,
                "x={} y={} {}/{}",
                render_parts(p),
                render_parts(t),
                c.numer(),
                c.denom()
            );
        }
        out
    }
}

fn render_parts(p: &Partition) -> String {
    if p.is_empty() {
        "-".to_string()
    } else {
        p.to_string()
    }
}

fn merge_parts(a: &Partition, b: &Partition) -> Partition {
    let mut parts = Vec::with_capacity(a.parts().len() + b.parts().len());
    parts.extend_from_slice(a.parts());
    parts.extend_from_slice(b.parts());
    Partition::new(parts)
}

/// Cycle indices of front-rooted coding-tree structures for every class
/// λ ⊢ k, truncated by x-weight and built in x-weight lockstep.
///
/// The recursion mirrors the generating-function engine one level up:
///
/// ```text
/// Z_Y(λ)   = p_1[y] · exp( Σ_{m≥1} stretch(Z_F(λ^m), m)/m )
/// Z_F(μ)   = p_1[x] · Π_{ℓ ∈ μ} stretch(Z_Y(μ^ℓ), ℓ)
/// Z_XY(λ)  = p_1[x] · Π_{ℓ ∈ λ} stretch(Z_Y(λ^ℓ − {1}), ℓ)    for λ ⊢ k+1
/// ```
///
/// with the transport products along each cycle collapsed to partition
/// powers, which is what lets the table be keyed by class.
pub struct GammaCiTable {
    k: u32,
    max_x_weight: usize,
    front_rooted: BTreeMap<Partition, CycleIndex>,
}

impl GammaCiTable {
    pub fn build(k: u32, max_x_weight: usize, bounds: &CiBounds) -> Result<Self, CiError> {
        if k == 0 {
            return Err(CiError::InvalidK { k });
        }
        if k > bounds.max_k || max_x_weight > bounds.max_x_weight {
            return Err(CiError::BoundsExceeded {
                k,
                degree: max_x_weight,
                max_k: bounds.max_k,
                max_x_weight: bounds.max_x_weight,
            });
        }
        let d = max_x_weight;
        let classes = partitions_of(k);
        let slot: BTreeMap<Partition, usize> = classes.iter().cloned().zip(0..).collect();

        // Homogeneous x-weight pieces, advancing in lockstep across classes.
        let n_classes = classes.len();
        let mut z: Vec<Vec<CycleIndex>> =
            vec![vec![CycleIndex::y_power_sum(d, 1)]; n_classes];
        let mut g: Vec<Vec<CycleIndex>> = vec![vec![CycleIndex::zero(d)]; n_classes];
        let mut h: Vec<Vec<CycleIndex>> = vec![vec![CycleIndex::unit(d)]; n_classes];

        let z_truncated = |z: &Vec<Vec<CycleIndex>>, idx: usize, w: usize| -> CycleIndex {
            let mut acc = CycleIndex::zero(d);
            for piece in z[idx].iter().take(w + 1) {
                acc = acc.add(piece);
            }
            acc
        };

        // x-weight-w piece of Z_F(μ) = p_1[x]·Π_ℓ stretch(Z_Y(μ^ℓ), ℓ).
        let fk_piece = |z: &Vec<Vec<CycleIndex>>, mu: &Partition, w: usize| -> CycleIndex {
            if w < 1 {
                return CycleIndex::zero(d);
            }
            let mut product = CycleIndex::unit(d);
            for &l in mu.parts() {
                let inner = z_truncated(z, slot[&mu.power(l)], (w - 1) / l as usize);
                product = product.mul(&inner.stretch(l));
            }
            CycleIndex::x_power_sum(d, 1).mul(&product.x_homogeneous(w - 1))
        };

        for degree in 1..=d {
            for (idx, lam) in classes.iter().enumerate() {
                let mut gd = CycleIndex::zero(d);
                for m in 1..=degree {
                    if degree % m != 0 {
                        continue;
                    }
                    let piece = fk_piece(&z, &lam.power(m as u32), degree / m);
                    gd = gd.add(
                        &piece
                            .stretch(m as u32)
                            .scale(&BigRational::new(BigInt::one(), BigInt::from(m))),
                    );
                }
                g[idx].push(gd);
            }
            for idx in 0..n_classes {
                let mut hd = CycleIndex::zero(d);
                for e in 1..=degree {
                    let weight = BigRational::new(BigInt::from(e), BigInt::from(degree));
                    hd = hd.add(&g[idx][e].mul(&h[idx][degree - e]).scale(&weight));
                }
                let zd = CycleIndex::y_power_sum(d, 1).mul(&hd);
                h[idx].push(hd);
                z[idx].push(zd);
            }
        }

        let mut front_rooted = BTreeMap::new();
        for (idx, lam) in classes.iter().enumerate() {
            let full = z_truncated(&z, idx, d);
            // Every front-rooted structure with n hedra has exactly kn+1 fronts.
            for ((p, t), _) in full.terms() {
                assert_eq!(
                    t.weight(),
                    k * p.weight() + 1,
                    "front-count invariant violated for class {lam}"
                );
            }
            front_rooted.insert(lam.clone(), full);
        }
        Ok(GammaCiTable { k, max_x_weight: d, front_rooted })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn max_x_weight(&self) -> usize {
        self.max_x_weight
    }

    /// Cycle index of front-rooted structures for class λ ⊢ k.
    pub fn front_rooted(&self, lam: &Partition) -> Result<&CycleIndex, CiError> {
        self.front_rooted.get(lam).ok_or_else(|| CiError::WrongWeight {
            partition: lam.to_string(),
            expected: self.k,
            got: lam.weight(),
        })
    }

    pub fn classes(&self) -> impl Iterator<Item = (&Partition, &CycleIndex)> {
        self.front_rooted.iter()
    }

    /// Cycle index of hedron-front-rooted structures for class λ ⊢ k+1.
    pub fn hedron_front_rooted(&self, lam: &Partition) -> Result<CycleIndex, CiError> {
        if lam.weight() != self.k + 1 {
            return Err(CiError::WrongWeight {
                partition: lam.to_string(),
                expected: self.k + 1,
                got: lam.weight(),
            });
        }
        let mut product = CycleIndex::unit(self.max_x_weight);
        for &l in lam.parts() {
            let key = lam
                .power(l)
                .remove_part(1)
                .expect("a partition power at one of its own parts has a fixed point");
            product = product.mul(&self.front_rooted(&key)?.stretch(l));
        }
        Ok(CycleIndex::x_power_sum(self.max_x_weight, 1).mul(&product))
    }

    /// The class arguments visited by [`Self::hedron_front_rooted`]: for each
    /// part ℓ of λ, the table key λ^ℓ − {1}. Exposed so tests can check the
    /// structure of the recursion itself.
    pub fn hedron_front_argument_keys(lam: &Partition) -> Vec<(u32, Partition)> {
        lam.parts()
            .iter()
            .map(|&l| (l, lam.power(l).remove_part(1).expect("fixed point")))
            .collect()
    }
}

/// The ordinary two-sort cycle index of unlabeled k-trees, truncated at
/// x-weight `max_x_weight`: the class-weighted dissymmetry combination of the
/// rooted cycle indices. Individual coefficients may be negative rationals;
/// only counts extracted from it are guaranteed nonnegative.
pub fn ktree_cycle_index(
    k: u32,
    max_x_weight: usize,
    bounds: &CiBounds,
) -> Result<CycleIndex, CiError> {
    let table = GammaCiTable::build(k, max_x_weight, bounds)?;
    let mut total = CycleIndex::zero(max_x_weight);
    for lam in partitions_of(k + 1) {
        let weight = BigRational::new(BigInt::one(), lam.centralizer_order());
        total = total.add(&table.hedron_front_rooted(&lam)?.scale(&weight));
    }
    for lam in partitions_of(k) {
        let weight = BigRational::new(BigInt::one(), lam.centralizer_order());
        total = total.add(&table.front_rooted(&lam)?.scale(&weight));
        let padded = lam.with_part(1);
        total = total.sub(&table.hedron_front_rooted(&padded)?.scale(&weight));
    }
    for ((p, t), _) in total.terms() {
        assert!(
            t.weight() <= k * p.weight() + 1,
            "front-count bound violated in combined cycle index"
        );
    }
    Ok(total)
}
