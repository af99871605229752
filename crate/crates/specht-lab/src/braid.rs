//! Braid words, the projection to the symmetric group, winding numbers,
//! named pure braids, and membership in the six normal subgroups cut out
//! by winding-number equations.
//!
//! Orientation is pinned operationally: a positive crossing (letter +k)
//! contributes +1 to the doubled winding of the pair of strands at
//! positions k, k+1, so the whole twist on strands 1 and 2 maps to the
//! basis vector v_12, and conjugation satisfies
//! `winding(g w g^-1) = act(rho(g), winding(w))`.

use crate::linalg::{bi, IntMatrix, Lattice};
use crate::modules::{
    pair_index, pair_list, polytabloid_coords, special_element, ModuleElement, PresentedModule,
    SpecialKind,
};
use crate::perm::Permutation;
use crate::ring::Ring;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BraidError {
    #[error("letter {0} is out of range for {1} strands")]
    LetterOutOfRange(i64, usize),
    #[error("braid is not pure; it projects to {0}")]
    NotPure(Permutation),
    #[error("invalid braid text: {0}")]
    Parse(String),
    #[error("invalid index data: {0}")]
    IndexError(String),
    #[error("subgroup {0} is not defined at n = 3")]
    UnsupportedAtN3(String),
    #[error("strand counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
}

/// A word in the braid generators: letter `k` (1 <= |k| < n) denotes the
/// positive (`k > 0`) or negative half twist on strands |k|, |k|+1.
/// Words are never freely reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i64>) -> Result<Self, BraidError> {
        for &k in &letters {
            if k == 0 || k.unsigned_abs() as usize >= n {
                return Err(BraidError::LetterOutOfRange(k, n));
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    /// Whitespace-separated signed integers, e.g. "1 2 -1 -2".
    pub fn parse(n: usize, text: &str) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let k: i64 = tok
                .parse()
                .map_err(|_| BraidError::Parse(format!("bad letter {tok:?}")))?;
            letters.push(k);
        }
        BraidWord::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.n != other.n {
            return Err(BraidError::SizeMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            n: self.n,
            letters,
        })
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&k| -k).collect(),
        }
    }

    pub fn text(&self) -> String {
        self.letters
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid[{}: {}]", self.n, self.text())
    }
}

/// The canonical projection to the symmetric group, sending the positive
/// half twist `k` to the adjacent transposition s_k. Multiplicative over
/// concatenation for the apply-right-first composition convention.
pub fn rho(w: &BraidWord) -> Permutation {
    let mut out = Permutation::identity(w.n);
    for &k in &w.letters {
        let s = Permutation::adjacent(w.n, k.unsigned_abs() as usize).unwrap();
        out = out.compose(&s).unwrap();
    }
    out
}

/// Winding vector of a pure braid, as an element of the pair module over
/// Z: the coefficient on v_ij is the number of full twists of strand i
/// around strand j.
///
/// Strand tracking: positions carry strands; each letter +-k adds +-1 to
/// the doubled winding of the pair of strands currently at positions
/// k, k+1 and then swaps them. Doubled counts stay integers throughout
/// and are halved only after the purity check.
pub fn winding_vector(w: &BraidWord) -> Result<ModuleElement, BraidError> {
    let n = w.n;
    let c = n * (n - 1) / 2;
    let mut doubled = vec![BigInt::zero(); c];
    let mut strand_at: Vec<usize> = (1..=n).collect();
    for &k in &w.letters {
        let pos = k.unsigned_abs() as usize;
        let (a, b) = (strand_at[pos - 1], strand_at[pos]);
        let idx = pair_index(n, a, b);
        if k > 0 {
            doubled[idx] += 1;
        } else {
            doubled[idx] -= 1;
        }
        strand_at.swap(pos - 1, pos);
    }
    let perm = rho(w);
    if !perm.is_identity() {
        return Err(BraidError::NotPure(perm));
    }
    let two = BigInt::from(2);
    let coords: Vec<BigInt> = doubled
        .into_iter()
        .map(|d| {
            debug_assert!(d.is_even(), "doubled winding of a pure braid is even");
            d / &two
        })
        .collect();
    let m2 = PresentedModule::m2(n, Ring::Z);
    Ok(m2.element(coords).expect("ambient vector"))
}

// ---------------------------------------------------------------------------
// Named pure braids.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedBraid {
    /// the whole twist a_ij
    A,
    /// y_i: drag strand i once around all the others, positively
    Y,
    /// z: generator of the center, the product of all whole twists
    Z,
    /// braid whose winding vector is the standard polytabloid e_ij
    Lift,
}

/// Word for the whole twist a_ij (i < j):
/// sigma_{j-1} ... sigma_{i+1} sigma_i^2 sigma_{i+1}^-1 ... sigma_{j-1}^-1.
fn whole_twist(n: usize, i: usize, j: usize) -> Result<BraidWord, BraidError> {
    if !(1 <= i && i < j && j <= n) {
        return Err(BraidError::IndexError(format!("a_{i}{j} needs 1 <= i < j <= {n}")));
    }
    let mut letters = Vec::new();
    for k in (i + 1..j).rev() {
        letters.push(k as i64);
    }
    letters.push(i as i64);
    letters.push(i as i64);
    for k in i + 1..j {
        letters.push(-(k as i64));
    }
    BraidWord::new(n, letters)
}

pub fn named_braid(
    kind: NamedBraid,
    indices: &[usize],
    n: usize,
) -> Result<BraidWord, BraidError> {
    match kind {
        NamedBraid::A => {
            let [i, j] = indices else {
                return Err(BraidError::IndexError("a takes two indices".into()));
            };
            whole_twist(n, *i, *j)
        }
        NamedBraid::Y => {
            let [i] = indices else {
                return Err(BraidError::IndexError("y takes one index".into()));
            };
            if *i < 1 || *i > n {
                return Err(BraidError::IndexError(format!("y_{i} out of range")));
            }
            let mut w = BraidWord::identity(n);
            for k in 1..*i {
                w = w.concat(&whole_twist(n, k, *i)?)?;
            }
            for k in *i + 1..=n {
                w = w.concat(&whole_twist(n, *i, k)?)?;
            }
            Ok(w)
        }
        NamedBraid::Z => {
            let mut w = BraidWord::identity(n);
            for (i, j) in pair_list(n) {
                w = w.concat(&whole_twist(n, i, j)?)?;
            }
            Ok(w)
        }
        NamedBraid::Lift => {
            let [i, j] = indices else {
                return Err(BraidError::IndexError("lift takes two indices".into()));
            };
            let (i, j) = (*i, *j);
            if i == 2 && (4..=n).contains(&j) {
                // a_13 a_2j a_1j^-1 a_23^-1
                let w = whole_twist(n, 1, 3)?
                    .concat(&whole_twist(n, 2, j)?)?
                    .concat(&whole_twist(n, 1, j)?.inverse())?
                    .concat(&whole_twist(n, 2, 3)?.inverse())?;
                Ok(w)
            } else if i >= 3 && i < j && j <= n {
                // a_12 a_ij a_1j^-1 a_2i^-1
                let w = whole_twist(n, 1, 2)?
                    .concat(&whole_twist(n, i, j)?)?
                    .concat(&whole_twist(n, 1, j)?.inverse())?
                    .concat(&whole_twist(n, 2, i)?.inverse())?;
                Ok(w)
            } else {
                Err(BraidError::IndexError(format!(
                    "({i},{j}) is not a standard polytabloid index for n = {n}"
                )))
            }
        }
    }
}

// ---------------------------------------------------------------------------
// The six distinguished normal subgroups.

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubgroupId {
    N0,
    N1,
    N2,
    N01,
    N02,
    N12,
}

impl SubgroupId {
    pub const ALL: [SubgroupId; 6] = [
        SubgroupId::N0,
        SubgroupId::N1,
        SubgroupId::N2,
        SubgroupId::N01,
        SubgroupId::N02,
        SubgroupId::N12,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            SubgroupId::N0 => "N0",
            SubgroupId::N1 => "N1",
            SubgroupId::N2 => "N2",
            SubgroupId::N01 => "N01",
            SubgroupId::N02 => "N02",
            SubgroupId::N12 => "N12",
        }
    }

    pub fn parse(text: &str) -> Option<SubgroupId> {
        Self::ALL.into_iter().find(|id| id.label() == text)
    }
}

/// Rows of the homogeneous winding-number system cutting out the image
/// of each subgroup in the pair module.
pub fn winding_equation_rows(id: SubgroupId, n: usize) -> Result<IntMatrix, BraidError> {
    if n == 3 && !matches!(id, SubgroupId::N0 | SubgroupId::N1) {
        return Err(BraidError::UnsupportedAtN3(id.label().to_string()));
    }
    let pairs = pair_list(n);
    let c = pairs.len();
    let idx = |i: usize, j: usize| pair_index(n, i, j);
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    match (id, n) {
        (SubgroupId::N0, _) => {
            // all windings equal
            for p in 1..c {
                let mut row = vec![BigInt::zero(); c];
                row[p - 1] += 1;
                row[p] -= 1;
                rows.push(row);
            }
        }
        (SubgroupId::N1, 3) => {
            // sum of all three windings vanishes
            rows.push(vec![BigInt::from(1); c]);
        }
        (SubgroupId::N1, _) => {
            // (n-4) w_ij = sum_{k not in {i,j}} (w_ik + w_jk)
            for &(i, j) in &pairs {
                let mut row = vec![BigInt::zero(); c];
                row[idx(i, j)] += bi(n as i64 - 4);
                for k in 1..=n {
                    if k != i && k != j {
                        row[idx(i, k)] -= 1;
                        row[idx(j, k)] -= 1;
                    }
                }
                rows.push(row);
            }
        }
        (SubgroupId::N2, _) => {
            // each strand's total winding vanishes
            for i in 1..=n {
                let mut row = vec![BigInt::zero(); c];
                for j in 1..=n {
                    if j != i {
                        row[idx(i, j)] += 1;
                    }
                }
                rows.push(row);
            }
        }
        (SubgroupId::N01, _) => {
            // (n-2)(n-3) w_ij + 2 sum_{disjoint} w_kl
            //   = (n-3) sum_{k not in {i,j}} (w_ik + w_jk)
            for &(i, j) in &pairs {
                let mut row = vec![BigInt::zero(); c];
                row[idx(i, j)] += bi(((n - 2) * (n - 3)) as i64);
                for &(k, l) in &pairs {
                    if k != i && k != j && l != i && l != j {
                        row[idx(k, l)] += 2;
                    }
                }
                for k in 1..=n {
                    if k != i && k != j {
                        row[idx(i, k)] -= bi((n - 3) as i64);
                        row[idx(j, k)] -= bi((n - 3) as i64);
                    }
                }
                rows.push(row);
            }
        }
        (SubgroupId::N02, _) => {
            // (n-2) sum_{j != i} w_ij = 2 sum_{i not in {j,k}} w_jk
            for i in 1..=n {
                let mut row = vec![BigInt::zero(); c];
                for j in 1..=n {
                    if j != i {
                        row[idx(i, j)] += bi((n - 2) as i64);
                    }
                }
                for &(k, l) in &pairs {
                    if k != i && l != i {
                        row[idx(k, l)] -= 2;
                    }
                }
                rows.push(row);
            }
        }
        (SubgroupId::N12, _) => {
            rows.push(vec![BigInt::from(1); c]);
        }
    }
    let mut m = IntMatrix::zero(rows.len(), c);
    for (r, row) in rows.iter().enumerate() {
        for (cc, v) in row.iter().enumerate() {
            if !v.is_zero() {
                m.set(r, cc, v.clone());
            }
        }
    }
    Ok(m)
}

/// Membership of a pure braid in a subgroup, decided by evaluating the
/// winding-number equations on its winding vector.
pub fn specht_membership(w: &BraidWord, id: SubgroupId) -> Result<bool, BraidError> {
    let wind = winding_vector(w)?;
    let eqs = winding_equation_rows(id, w.n)?;
    Ok(eqs.mul_vec(wind.coords()).iter().all(|x| x.is_zero()))
}

/// The image of a subgroup in the pair module: the solution lattice of
/// its winding-number equations.
pub fn specht_lattice(id: SubgroupId, n: usize) -> Result<Lattice, BraidError> {
    let eqs = winding_equation_rows(id, n)?;
    Ok(crate::linalg::kernel_basis(&eqs))
}

/// Winding vectors of the finite generating set of each subgroup modulo
/// the commutator subgroup: the images of the listed pure braids.
pub fn generator_winding_vectors(id: SubgroupId, n: usize) -> Result<Vec<ModuleElement>, BraidError> {
    if n == 3 {
        return match id {
            SubgroupId::N0 => Ok(vec![winding_vector(&named_braid(NamedBraid::Z, &[], 3)?)?]),
            SubgroupId::N1 => {
                // a_23 a_13^-1 and a_23 a_12^-1
                let a23 = whole_twist(3, 2, 3)?;
                let a13 = whole_twist(3, 1, 3)?;
                let a12 = whole_twist(3, 1, 2)?;
                Ok(vec![
                    winding_vector(&a23.concat(&a13.inverse())?)?,
                    winding_vector(&a23.concat(&a12.inverse())?)?,
                ])
            }
            _ => Err(BraidError::UnsupportedAtN3(id.label().to_string())),
        };
    }
    let lifts = || -> Result<Vec<ModuleElement>, BraidError> {
        crate::modules::standard_polytabloid_pairs(n)
            .into_iter()
            .map(|(i, j)| winding_vector(&named_braid(NamedBraid::Lift, &[i, j], n)?))
            .collect()
    };
    let z = winding_vector(&named_braid(NamedBraid::Z, &[], n)?)?;
    let y = |i: usize| -> Result<ModuleElement, BraidError> {
        winding_vector(&named_braid(NamedBraid::Y, &[i], n)?)
    };
    match id {
        SubgroupId::N0 => Ok(vec![z]),
        SubgroupId::N1 => {
            let y1 = named_braid(NamedBraid::Y, &[1], n)?;
            let mut out = Vec::new();
            for i in 2..=n {
                let w = named_braid(NamedBraid::Y, &[i], n)?.concat(&y1.inverse())?;
                out.push(winding_vector(&w)?);
            }
            if n % 2 == 0 {
                // z y_1^(-n/2)
                let mut w = named_braid(NamedBraid::Z, &[], n)?;
                for _ in 0..n / 2 {
                    w = w.concat(&y1.inverse())?;
                }
                out.push(winding_vector(&w)?);
            }
            Ok(out)
        }
        SubgroupId::N2 => lifts(),
        SubgroupId::N01 => {
            let mut out = vec![z];
            for i in 1..n {
                out.push(y(i)?);
            }
            Ok(out)
        }
        SubgroupId::N02 => {
            let mut out = lifts()?;
            out.push(z);
            Ok(out)
        }
        SubgroupId::N12 => {
            let a12 = whole_twist(n, 1, 2)?;
            let mut out = Vec::new();
            for (i, j) in pair_list(n) {
                if (i, j) != (1, 2) {
                    let w = whole_twist(n, i, j)?.concat(&a12.inverse())?;
                    out.push(winding_vector(&w)?);
                }
            }
            Ok(out)
        }
    }
}

/// Pure braids (not just winding vectors) for the generating sets; used
/// by membership spot checks.
pub fn generator_braids(id: SubgroupId, n: usize) -> Result<Vec<BraidWord>, BraidError> {
    if n == 3 {
        return match id {
            SubgroupId::N0 => Ok(vec![named_braid(NamedBraid::Z, &[], 3)?]),
            SubgroupId::N1 => {
                let a23 = whole_twist(3, 2, 3)?;
                Ok(vec![
                    a23.concat(&whole_twist(3, 1, 3)?.inverse())?,
                    a23.concat(&whole_twist(3, 1, 2)?.inverse())?,
                ])
            }
            _ => Err(BraidError::UnsupportedAtN3(id.label().to_string())),
        };
    }
    let lift_words = || -> Result<Vec<BraidWord>, BraidError> {
        crate::modules::standard_polytabloid_pairs(n)
            .into_iter()
            .map(|(i, j)| named_braid(NamedBraid::Lift, &[i, j], n))
            .collect()
    };
    let z = named_braid(NamedBraid::Z, &[], n)?;
    match id {
        SubgroupId::N0 => Ok(vec![z]),
        SubgroupId::N1 => {
            let y1 = named_braid(NamedBraid::Y, &[1], n)?;
            let mut out = Vec::new();
            for i in 2..=n {
                out.push(named_braid(NamedBraid::Y, &[i], n)?.concat(&y1.inverse())?);
            }
            if n % 2 == 0 {
                let mut w = z.clone();
                for _ in 0..n / 2 {
                    w = w.concat(&y1.inverse())?;
                }
                out.push(w);
            }
            Ok(out)
        }
        SubgroupId::N2 => lift_words(),
        SubgroupId::N01 => {
            let mut out = vec![z];
            for i in 1..n {
                out.push(named_braid(NamedBraid::Y, &[i], n)?);
            }
            Ok(out)
        }
        SubgroupId::N02 => {
            let mut out = lift_words()?;
            out.push(z);
            Ok(out)
        }
        SubgroupId::N12 => {
            let a12 = whole_twist(n, 1, 2)?;
            let mut out = Vec::new();
            for (i, j) in pair_list(n) {
                if (i, j) != (1, 2) {
                    out.push(whole_twist(n, i, j)?.concat(&a12.inverse())?);
                }
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modules::act;

    #[test]
    fn rho_examples() {
        assert!(rho(&BraidWord::parse(3, "").unwrap()).is_identity());
        assert_eq!(
            rho(&BraidWord::parse(3, "1").unwrap()),
            Permutation::adjacent(3, 1).unwrap()
        );
        assert!(rho(&BraidWord::parse(3, "1 1").unwrap()).is_identity());
    }

    #[test]
    fn winding_examples() {
        let n = 3;
        let a12 = BraidWord::parse(n, "1 1").unwrap();
        let w = winding_vector(&a12).unwrap();
        assert_eq!(
            w,
            special_element(SpecialKind::V, &[1, 2], n, Ring::Z).unwrap()
        );
        assert!(winding_vector(&BraidWord::identity(n)).unwrap().is_zero());
        // a_13 in B_3, tracked by hand
        let a13 = BraidWord::parse(n, "2 1 1 -2").unwrap();
        assert_eq!(
            winding_vector(&a13).unwrap(),
            special_element(SpecialKind::V, &[1, 3], n, Ring::Z).unwrap()
        );
    }

    #[test]
    fn not_pure_reports_projection() {
        let w = BraidWord::parse(3, "1").unwrap();
        match winding_vector(&w) {
            Err(BraidError::NotPure(p)) => assert_eq!(p, Permutation::adjacent(3, 1).unwrap()),
            other => panic!("expected NotPure, got {other:?}"),
        }
    }

    #[test]
    fn whole_twists_abelianize_to_basis_vectors() {
        for n in 3..=6 {
            for (i, j) in pair_list(n) {
                let a = named_braid(NamedBraid::A, &[i, j], n).unwrap();
                let w = winding_vector(&a).unwrap();
                assert_eq!(
                    w,
                    special_element(SpecialKind::V, &[i, j], n, Ring::Z).unwrap(),
                    "a_{i}{j} at n = {n}"
                );
            }
        }
        assert_eq!(
            named_braid(NamedBraid::A, &[1, 2], 4).unwrap().text(),
            "1 1"
        );
    }

    #[test]
    fn named_windings() {
        for n in 3..=6 {
            let z = named_braid(NamedBraid::Z, &[], n).unwrap();
            assert_eq!(
                winding_vector(&z).unwrap(),
                special_element(SpecialKind::U, &[], n, Ring::Z).unwrap()
            );
        }
        for n in 4..=6 {
            for i in 1..=n {
                let y = named_braid(NamedBraid::Y, &[i], n).unwrap();
                assert_eq!(
                    winding_vector(&y).unwrap(),
                    special_element(SpecialKind::W, &[i], n, Ring::Z).unwrap()
                );
            }
            for (i, j) in crate::modules::standard_polytabloid_pairs(n) {
                let lift = named_braid(NamedBraid::Lift, &[i, j], n).unwrap();
                assert_eq!(
                    winding_vector(&lift).unwrap(),
                    special_element(SpecialKind::E, &[i, j], n, Ring::Z).unwrap(),
                    "lift({i},{j}) at n = {n}"
                );
            }
        }
    }

    #[test]
    fn membership_examples() {
        let n = 4;
        let z = named_braid(NamedBraid::Z, &[], n).unwrap();
        assert!(specht_membership(&z, SubgroupId::N0).unwrap());
        let a12 = BraidWord::parse(n, "1 1").unwrap();
        assert!(!specht_membership(&a12, SubgroupId::N12).unwrap());
        let lift = named_braid(NamedBraid::Lift, &[3, 4], n).unwrap();
        assert!(specht_membership(&lift, SubgroupId::N2).unwrap());
    }

    #[test]
    fn lattice_examples() {
        let n = 4;
        let n0 = specht_lattice(SubgroupId::N0, n).unwrap();
        assert_eq!(n0.rank(), 1);
        assert!(n0.contains(
            special_element(SpecialKind::U, &[], n, Ring::Z)
                .unwrap()
                .coords()
        ));
        let n12 = specht_lattice(SubgroupId::N12, n).unwrap();
        assert_eq!(n12.rank(), 5);
        let n01 = specht_lattice(SubgroupId::N01, n).unwrap();
        let gens = generator_winding_vectors(SubgroupId::N01, n).unwrap();
        let spanned = Lattice::from_generators(
            6,
            gens.iter().map(|g| g.coords().to_vec()).collect(),
        );
        assert_eq!(n01, spanned, "z, y_1..y_3 span the N01 lattice at n=4");
    }

    #[test]
    fn conjugation_covariance_spot() {
        // winding(g w g^-1) = act(rho(g), winding(w))
        let n = 4;
        let g = BraidWord::parse(n, "1 2 3 1").unwrap();
        let w = named_braid(NamedBraid::A, &[1, 3], n).unwrap();
        let conj = g.concat(&w).unwrap().concat(&g.inverse()).unwrap();
        let lhs = winding_vector(&conj).unwrap();
        let rhs = act(&rho(&g), &winding_vector(&w).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn winding_additive_and_antisymmetric() {
        let n = 4;
        let w1 = named_braid(NamedBraid::A, &[1, 3], n).unwrap();
        let w2 = named_braid(NamedBraid::A, &[2, 4], n).unwrap();
        let sum = winding_vector(&w1.concat(&w2).unwrap()).unwrap();
        assert_eq!(
            sum,
            winding_vector(&w1)
                .unwrap()
                .add(&winding_vector(&w2).unwrap())
                .unwrap()
        );
        assert_eq!(
            winding_vector(&w1.inverse()).unwrap(),
            winding_vector(&w1).unwrap().neg()
        );
    }

    #[test]
    fn free_reduction_invariance() {
        let n = 4;
        let w = named_braid(NamedBraid::A, &[2, 4], n).unwrap();
        // insert a cancelling pair mid-word
        let mut letters = w.letters().to_vec();
        letters.insert(2, 3);
        letters.insert(3, -3);
        let padded = BraidWord::new(n, letters).unwrap();
        assert_eq!(rho(&w), rho(&padded));
        assert_eq!(
            winding_vector(&w).unwrap(),
            winding_vector(&padded).unwrap()
        );
    }

    #[test]
    fn n3_subgroups() {
        let n = 3;
        assert!(matches!(
            specht_lattice(SubgroupId::N2, n),
            Err(BraidError::UnsupportedAtN3(_))
        ));
        for id in [SubgroupId::N0, SubgroupId::N1] {
            let sol = specht_lattice(id, n).unwrap();
            let gens = generator_winding_vectors(id, n).unwrap();
            let spanned =
                Lattice::from_generators(3, gens.iter().map(|g| g.coords().to_vec()).collect());
            assert_eq!(sol, spanned, "{id:?} at n = 3");
        }
    }

    #[test]
    fn polytabloid_coords_match_lift_windings() {
        let n = 5;
        for (i, j) in crate::modules::standard_polytabloid_pairs(n) {
            let lift = named_braid(NamedBraid::Lift, &[i, j], n).unwrap();
            let w = winding_vector(&lift).unwrap();
            assert_eq!(w.coords(), polytabloid_coords(n, i, j).unwrap().as_slice());
        }
    }
}
