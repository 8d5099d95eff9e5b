//! The production enumeration engine: partition-indexed ordinary generating
//! functions for rooted coding trees, combined by dissymmetry into the
//! series counting unlabeled k-trees by hedron count.
//!
//! For each conjugacy class λ of the front symmetry group, the series
//! `front_rooted(λ)` counts unlabeled front-rooted structures invariant
//! under that class. The defining recursion is
//!
//! ```text
//! F(λ) = exp( Σ_{n≥1} (x^n/n) · Π_{i ∈ λ^n} F(λ^{n·i})(x^{n·i}) )
//! ```
//!
//! where λ^i is the partition power and the product runs over the parts of
//! λ^n with multiplicity. Coefficient d of every series depends only on
//! coefficients of degree < d across the whole table (the x^n prefactor
//! guarantees it), so the table for all λ ⊢ k advances in degree lockstep
//! with no fixed-point iteration. Keying by partition rather than by group
//! element is what makes k = 10 feasible: p(10) = 42 series instead of
//! 10! = 3628800.
//!
//! Hedron-front-rooted series are cheap products over the table:
//!
//! ```text
//! H(λ) = x · Π_{i ∈ λ} F(λ^i − {1})(x^i)        for λ ⊢ k+1
//! ```
//!
//! (λ^i has a fixed point whenever i is a part of λ, so the removal is
//! always possible.) The unlabeled k-tree series is then the class-weighted
//! dissymmetry combination
//!
//! ```text
//! ã_k = Σ_{λ⊢k+1} H(λ)/z_λ + Σ_{λ⊢k} F(λ)/z_λ − Σ_{λ⊢k} H(λ∪{1})/z_λ .
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partitions::{partitions_of, Partition};
use crate::series::{Series, SeriesError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GammaGfError {
    #[error("k must be >= 1 (a 0-tree is degenerate), got {k}")]
    InvalidK { k: u32 },
    #[error("partition {partition} has weight {got}, expected {expected}")]
    WrongWeight { partition: String, expected: u32, got: u32 },
    #[error("integrality failure in {context}: {source}")]
    Integrality { context: String, source: SeriesError },
}

/// Memo table of front-rooted series for every λ ⊢ k, all truncated at the
/// same order and finalized together.
pub struct GammaSeriesTable {
    k: u32,
    order: usize,
    front_rooted: BTreeMap<Partition, Series>,
}

impl GammaSeriesTable {
    /// Computes the full table for `k` at truncation order `order`.
    pub fn build(k: u32, order: usize) -> Result<Self, GammaGfError> {
        if k == 0 {
            return Err(GammaGfError::InvalidK { k });
        }
        let classes = partitions_of(k);
        let index: BTreeMap<Partition, usize> = classes.iter().cloned().zip(0..).collect();

        // factors[c][n-1]: the product Π_{i ∈ λ^n} F(λ^{n·i})(x^{n·i}) as
        // (stride n·i, table slot of λ^{n·i}) pairs, resolved up front.
        let mut factors: Vec<Vec<Vec<(usize, usize)>>> = Vec::with_capacity(classes.len());
        for lam in &classes {
            let mut per_n = Vec::with_capacity(order);
            for n in 1..=order.max(1) as u32 {
                let lam_n = lam.power(n);
                let pairs = lam_n
                    .parts()
                    .iter()
                    .map(|&i| ((n * i) as usize, index[&lam.power(n * i)]))
                    .collect();
                per_n.push(pairs);
            }
            factors.push(per_n);
        }

        // Degree lockstep: g holds the exp arguments, f the series themselves.
        let mut f: Vec<Vec<BigRational>> = vec![vec![BigRational::one()]; classes.len()];
        let mut g: Vec<Vec<BigRational>> = vec![vec![BigRational::zero()]; classes.len()];
        for d in 1..=order {
            for c in 0..classes.len() {
                let mut gd = BigRational::zero();
                for n in 1..=d {
                    let e = d - n;
                    let top = truncated_product_coeff(&factors[c][n - 1], e, &f);
                    if !top.is_zero() {
                        gd += top / BigRational::from_integer(BigInt::from(n));
                    }
                }
                g[c].push(gd);
            }
            for c in 0..classes.len() {
                let mut acc = BigRational::zero();
                for m in 1..=d {
                    if g[c][m].is_zero() {
                        continue;
                    }
                    acc += &g[c][m] * &f[c][d - m] * BigRational::from_integer(BigInt::from(m));
                }
                f[c].push(acc / BigRational::from_integer(BigInt::from(d)));
            }
        }

        let mut front_rooted = BTreeMap::new();
        for (lam, coeffs) in classes.into_iter().zip(f) {
            let series = Series::from_coeffs(coeffs);
            // Structure counts: every coefficient must be a nonnegative integer.
            series.nonneg_integer_coeffs().map_err(|source| GammaGfError::Integrality {
                context: format!("front-rooted series for class {lam}"),
                source,
            })?;
            front_rooted.insert(lam, series);
        }
        Ok(GammaSeriesTable { k, order, front_rooted })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The series of front-rooted structures invariant under class λ ⊢ k.
    pub fn front_rooted(&self, lam: &Partition) -> Result<&Series, GammaGfError> {
        self.front_rooted.get(lam).ok_or_else(|| GammaGfError::WrongWeight {
            partition: lam.to_string(),
            expected: self.k,
            got: lam.weight(),
        })
    }

    /// All (class, series) pairs, ascending by class.
    pub fn classes(&self) -> impl Iterator<Item = (&Partition, &Series)> {
        self.front_rooted.iter()
    }

    /// The series of hedron-front-rooted structures invariant under class
    /// λ ⊢ k+1, computed on demand from the table.
    pub fn hedron_front_rooted(&self, lam: &Partition) -> Result<Series, GammaGfError> {
        if lam.weight() != self.k + 1 {
            return Err(GammaGfError::WrongWeight {
                partition: lam.to_string(),
                expected: self.k + 1,
                got: lam.weight(),
            });
        }
        let mut product = Series::one(self.order);
        for &i in lam.parts() {
            let key = lam
                .power(i)
                .remove_part(1)
                .expect("a partition power at one of its own parts has a fixed point");
            let factor = self.front_rooted(&key)?.substitute_power(i as usize);
            product = &product * &factor;
        }
        let shifted = product.shifted(1);
        debug_assert!(shifted.coeff(0).is_zero());
        debug_assert!(self.order == 0 || shifted.coeff(1).is_one());
        Ok(shifted)
    }
}

/// Coefficient of x^e in the product of `factors`, where each factor is the
/// table series at `slot` with x ↦ x^stride applied. Works directly on the
/// in-progress coefficient columns (complete through degree e and beyond).
fn truncated_product_coeff(
    factors: &[(usize, usize)],
    e: usize,
    table: &[Vec<BigRational>],
) -> BigRational {
    let mut acc = vec![BigRational::zero(); e + 1];
    acc[0] = BigRational::one();
    for &(stride, slot) in factors {
        let series = &table[slot];
        let mut next = vec![BigRational::zero(); e + 1];
        for (c, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in series.iter().enumerate() {
                let degree = c + j * stride;
                if degree > e {
                    break;
                }
                if !b.is_zero() {
                    next[degree] += a * b;
                }
            }
        }
        acc = next;
    }
    acc.pop().unwrap()
}

/// The coefficients [a_0 .. a_order] of the unlabeled k-tree series: a_n is
/// the number of isomorphism classes of k-trees with n hedra (a_0 = 1, the
/// bare K_k).
pub fn unlabeled_ktree_series(k: u32, order: usize) -> Result<Vec<BigInt>, GammaGfError> {
    let table = GammaSeriesTable::build(k, order)?;
    let mut total = Series::zero(order);
    for lam in partitions_of(k + 1) {
        let weight = class_weight(&lam);
        total = &total + &table.hedron_front_rooted(&lam)?.scale(&weight);
    }
    for lam in partitions_of(k) {
        let weight = class_weight(&lam);
        total = &total + &table.front_rooted(&lam)?.scale(&weight);
        let padded = lam.with_part(1);
        total = &total - &table.hedron_front_rooted(&padded)?.scale(&weight);
    }
    total.nonneg_integer_coeffs().map_err(|source| GammaGfError::Integrality {
        context: format!("unlabeled {k}-tree series"),
        source,
    })
}

fn class_weight(lam: &Partition) -> BigRational {
    BigRational::new(BigInt::one(), lam.centralizer_order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn int_coeffs(s: &Series) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    /// Independent oracle: distinct rooted trees with up to `max_edges`
    /// edges, enumerated as canonical child multisets.
    fn rooted_trees_by_edges(max_edges: usize) -> Vec<u64> {
        // A rooted tree is a sorted multiset of child subtrees; edges =
        // Σ (1 + edges(child)). Canonical form: sorted nested parentheses.
        let mut by_edges: Vec<BTreeSet<String>> = vec![BTreeSet::new(); max_edges + 1];
        by_edges[0].insert("()".to_string());
        for e in 1..=max_edges {
            let mut found = BTreeSet::new();
            let pool: Vec<(usize, String)> = (0..e)
                .flat_map(|ce| by_edges[ce].iter().map(move |t| (ce + 1, t.clone())))
                .collect();
            fn extend(
                pool: &[(usize, String)],
                start: usize,
                remaining: usize,
                chosen: &mut Vec<String>,
                found: &mut BTreeSet<String>,
            ) {
                if remaining == 0 {
                    let mut children = chosen.clone();
                    children.sort();
                    found.insert(format!("({})", children.join("")));
                    return;
                }
                for idx in start..pool.len() {
                    let (w, t) = &pool[idx];
                    if *w <= remaining {
                        chosen.push(t.clone());
                        extend(pool, idx, remaining - w, chosen, found);
                        chosen.pop();
                    }
                }
            }
            extend(&pool, 0, e, &mut Vec::new(), &mut found);
            by_edges[e] = found;
        }
        by_edges.iter().map(|s| s.len() as u64).collect()
    }

    #[test]
    fn rooted_tree_oracle_is_sane() {
        assert_eq!(rooted_trees_by_edges(5), vec![1, 1, 2, 4, 9, 20]);
    }

    #[test]
    fn front_rooted_k1_counts_rooted_trees_by_edges() {
        let table = GammaSeriesTable::build(1, 5).unwrap();
        let got = int_coeffs(table.front_rooted(&part(&[1])).unwrap());
        let want: Vec<i64> = rooted_trees_by_edges(5).into_iter().map(|v| v as i64).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn front_rooted_k2_reproduces_worked_example() {
        let table = GammaSeriesTable::build(2, 5).unwrap();
        assert_eq!(
            int_coeffs(table.front_rooted(&part(&[1, 1])).unwrap()),
            vec![1, 1, 3, 10, 39, 160]
        );
        assert_eq!(int_coeffs(table.front_rooted(&part(&[2])).unwrap()), vec![1, 1, 1, 2, 3, 6]);
    }

    #[test]
    fn order_zero_table_is_all_ones() {
        for k in 1..=4 {
            let table = GammaSeriesTable::build(k, 0).unwrap();
            for (_, series) in table.classes() {
                assert_eq!(series.coeffs(), &[BigRational::one()]);
            }
        }
    }

    #[test]
    fn hedron_front_rooted_k1_is_shifted_square() {
        // x·F({1})² counts edge-rooted trees; checked against the
        // independent rooted-tree enumeration.
        let table = GammaSeriesTable::build(1, 3).unwrap();
        let got = int_coeffs(&table.hedron_front_rooted(&part(&[1, 1])).unwrap());
        assert_eq!(got, vec![0, 1, 2, 5]);
        let r = rooted_trees_by_edges(2);
        // coefficient of x^e is Σ_{a+b=e-1} R_a·R_b
        let manual: Vec<u64> = (0..=3usize)
            .map(|e| {
                (0..e)
                    .map(|a| {
                        let b = e - 1 - a;
                        if a < r.len() && b < r.len() {
                            r[a] * r[b]
                        } else {
                            0
                        }
                    })
                    .sum()
            })
            .collect();
        assert_eq!(got.iter().map(|&v| v as u64).collect::<Vec<_>>(), manual);
    }

    #[test]
    fn hedron_front_rooted_k2_three_cycle_class() {
        // Evaluating the product formula by hand from the worked-example
        // series: the only part is 3, λ³−{1} = {1,1}, so the series is
        // x·F({1,1})(x³) = x + x⁴ + 3x⁷ + …
        let table = GammaSeriesTable::build(2, 6).unwrap();
        let got = int_coeffs(&table.hedron_front_rooted(&part(&[3])).unwrap());
        assert_eq!(got, vec![0, 1, 0, 0, 1, 0, 0]);
    }

    #[test]
    fn hedron_front_rooted_rejects_wrong_weight() {
        let table = GammaSeriesTable::build(2, 4).unwrap();
        assert!(matches!(
            table.hedron_front_rooted(&part(&[2])),
            Err(GammaGfError::WrongWeight { expected: 3, got: 2, .. })
        ));
        assert!(matches!(
            table.front_rooted(&part(&[3])),
            Err(GammaGfError::WrongWeight { expected: 2, got: 3, .. })
        ));
    }

    #[test]
    fn k_zero_is_rejected() {
        assert!(matches!(unlabeled_ktree_series(0, 5), Err(GammaGfError::InvalidK { k: 0 })));
    }

    #[test]
    fn one_tree_series_matches_known_counts() {
        let got = unlabeled_ktree_series(1, 10).unwrap();
        let want: Vec<BigInt> =
            [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn two_tree_series_matches_known_counts() {
        let got = unlabeled_ktree_series(2, 10).unwrap();
        let want: Vec<BigInt> = [1i64, 1, 1, 2, 5, 12, 39, 136, 529, 2171, 9368]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn domination_by_identity_class() {
        // Structures invariant under a class are a subset of all structures,
        // counted by the identity class 1^k.
        for k in 1..=4u32 {
            let table = GammaSeriesTable::build(k, 12).unwrap();
            let identity = part(&vec![1; k as usize]);
            let bound = table.front_rooted(&identity).unwrap().clone();
            for (lam, series) in table.classes() {
                for d in 0..=12 {
                    assert!(series.coeff(d) <= bound.coeff(d), "k={k} class {lam} degree {d}");
                }
            }
        }
    }

    #[test]
    fn stabilization_in_k() {
        // Coefficients of x^n agree across k and k+1 once k >= n-2.
        let order = 8;
        let series: Vec<Vec<BigInt>> =
            (1..=9).map(|k| unlabeled_ktree_series(k, order).unwrap()).collect();
        for n in 0..=order {
            for k in n.saturating_sub(2).max(1)..9 {
                assert_eq!(series[k - 1][n], series[k][n], "n={n} k={k}");
            }
        }
    }
}
