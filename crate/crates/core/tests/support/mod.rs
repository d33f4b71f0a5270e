//! Independent brute-force oracle for Chevalley-Eilenberg Betti numbers.
//!
//! Deliberately shares no code with the engine: forms are sorted index
//! lists with bubble-sort signs, the differential is expanded term by term
//! from the structure constants, and ranks come from a plain fraction
//! Gauss elimination. Slow and simple on purpose.

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// One structure equation term: d e^{target} += coeff * e^i ^ e^j.
#[derive(Clone, Copy)]
pub struct StructureTerm {
    pub target: usize,
    pub coeff: i64,
    pub i: usize,
    pub j: usize,
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Sorts indices with the permutation sign; None if a repeat kills the
/// monomial.
fn normalize(mut indices: Vec<usize>) -> Option<(Vec<usize>, i64)> {
    let mut sign = 1i64;
    let len = indices.len();
    for pass in 0..len {
        for pos in 0..len - 1 - pass {
            if indices[pos] > indices[pos + 1] {
                indices.swap(pos, pos + 1);
                sign = -sign;
            }
        }
    }
    for w in indices.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((indices, sign))
}

type NaiveForm = BTreeMap<Vec<usize>, BigRational>;

fn add_term(form: &mut NaiveForm, indices: Vec<usize>, coeff: BigRational) {
    if coeff.is_zero() {
        return;
    }
    let Some((sorted, sign)) = normalize(indices) else {
        return;
    };
    let signed = if sign < 0 { -coeff } else { coeff };
    let entry = form.entry(sorted.clone()).or_insert_with(BigRational::zero);
    *entry += signed;
    if entry.is_zero() {
        form.remove(&sorted);
    }
}

/// d of a single monomial e^{i1} ^ ... ^ e^{ik} by the Leibniz expansion.
fn d_monomial(monomial: &[usize], terms: &[StructureTerm]) -> NaiveForm {
    let mut out = NaiveForm::new();
    for (slot, &gen) in monomial.iter().enumerate() {
        let slot_sign = if slot % 2 == 0 { 1 } else { -1 };
        for t in terms.iter().filter(|t| t.target == gen) {
            let mut indices = vec![t.i, t.j];
            for (other_slot, &other) in monomial.iter().enumerate() {
                if other_slot != slot {
                    indices.push(other);
                }
            }
            add_term(&mut out, indices, rational(slot_sign * t.coeff));
        }
    }
    out
}

fn monomials(n2: usize, degree: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        start: usize,
        n2: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for next in start..=n2 {
            current.push(next);
            rec(next + 1, n2, remaining - 1, current, out);
            current.pop();
        }
    }
    rec(1, n2, degree, &mut current, &mut out);
    out
}

/// Rank by textbook Gauss elimination over the rationals.
#[allow(clippy::needless_range_loop)]
fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / rows[rank][col].clone();
        for c in col..cols {
            let v = rows[rank][c].clone() * inv.clone();
            rows[rank][c] = v;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let delta = factor.clone() * rows[rank][c].clone();
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Betti numbers of the Chevalley-Eilenberg complex given by the structure
/// terms, degree by degree.
pub fn naive_betti(n2: usize, terms: &[StructureTerm]) -> Vec<usize> {
    // d matrix per degree, columns = degree-j monomials
    let d_rank: Vec<usize> = (0..=n2)
        .map(|j| {
            let sources = monomials(n2, j);
            let targets = monomials(n2, j + 1);
            if sources.is_empty() || targets.is_empty() {
                return 0;
            }
            let index: BTreeMap<Vec<usize>, usize> = targets
                .iter()
                .cloned()
                .enumerate()
                .map(|(idx, m)| (m, idx))
                .collect();
            let rows: Vec<Vec<BigRational>> = sources
                .iter()
                .map(|m| {
                    let image = d_monomial(m, terms);
                    let mut row = vec![BigRational::zero(); targets.len()];
                    for (mono, coeff) in image {
                        row[index[&mono]] = coeff;
                    }
                    row
                })
                .collect();
            rank(rows)
        })
        .collect();
    (0..=n2)
        .map(|j| {
            let dim = monomials(n2, j).len();
            let out_rank = d_rank[j];
            let in_rank = if j == 0 { 0 } else { d_rank[j - 1] };
            dim - out_rank - in_rank
        })
        .collect()
}

/// Structure terms of the dim-4 model (0,0,0,12).
pub fn kodaira_thurston_terms() -> Vec<StructureTerm> {
    vec![StructureTerm {
        target: 4,
        coeff: 1,
        i: 1,
        j: 2,
    }]
}

/// Structure terms of the dim-6 model (0,0,0,0,13+42,14+23).
pub fn iwasawa_terms() -> Vec<StructureTerm> {
    vec![
        StructureTerm {
            target: 5,
            coeff: 1,
            i: 1,
            j: 3,
        },
        StructureTerm {
            target: 5,
            coeff: -1,
            i: 2,
            j: 4,
        },
        StructureTerm {
            target: 6,
            coeff: 1,
            i: 1,
            j: 4,
        },
        StructureTerm {
            target: 6,
            coeff: 1,
            i: 2,
            j: 3,
        },
    ]
}
