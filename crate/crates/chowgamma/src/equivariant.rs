//! Permutation groups acting on matroids: chain characters of
//! rank-selected subposets, equivariant Hilbert series of the Chow and
//! augmented Chow bases, classwise gamma extraction, and the end-to-end
//! verification that the gamma coefficients are the homology characters
//! of the rank selections.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::chow::{fy_basis, RingKind};
use crate::matroid::{stab, FlatLattice};
use crate::perm::Perm;
use crate::poly::{gamma_expand, one_plus_t, MVPoly, PolyError, Var};
use crate::report::VerificationReport;
use crate::topology::OrderComplex;

pub const DEFAULT_GROUP_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EquivariantError {
    #[error("group order exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("generator degree {got} does not match the ground set size {expected}")]
    DegreeMismatch { got: usize, expected: usize },
    #[error("generator is not a bijection")]
    NotABijection,
    #[error("group element {element} is not an automorphism of the lattice of flats")]
    NotAnAutomorphism { element: String },
    #[error("series is not palindromic on class {class} at degree {degree}")]
    ClassPalindromyFailure { class: String, degree: usize },
}

/// A conjugacy class: its lexicographically smallest member as the
/// representative, and its size.
#[derive(Debug, Clone)]
pub struct ConjClass {
    pub rep: Perm,
    pub size: usize,
}

/// A fully materialized permutation group with its conjugacy classes.
/// Classes are sorted by representative, which fixes the indexing used
/// by every class function.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    classes: Vec<ConjClass>,
    identity_class: usize,
}

impl PermGroup {
    /// Closure of the generators by breadth-first products.
    pub fn from_generators(
        degree: usize,
        generators: &[Perm],
        cap: usize,
    ) -> Result<PermGroup, EquivariantError> {
        for g in generators {
            if g.degree() != degree {
                return Err(EquivariantError::DegreeMismatch {
                    got: g.degree(),
                    expected: degree,
                });
            }
        }
        let mut seen: HashMap<Perm, usize> = HashMap::new();
        let mut elements = vec![Perm::identity(degree)];
        seen.insert(elements[0].clone(), 0);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            let base = elements[i].clone();
            for g in generators {
                let next = base.compose(g);
                if !seen.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(EquivariantError::GroupTooLarge { cap });
                    }
                    seen.insert(next.clone(), elements.len());
                    frontier.push(elements.len());
                    elements.push(next);
                }
            }
        }
        elements.sort();
        Ok(Self::with_classes(degree, elements))
    }

    fn with_classes(degree: usize, elements: Vec<Perm>) -> PermGroup {
        let index: HashMap<&Perm, usize> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes: Vec<ConjClass> = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for h in &elements {
                let conj = h.inverse().compose(&elements[start]).compose(h);
                let j = index[&conj];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    members.push(j);
                }
            }
            // elements are sorted, so the first member is lex-minimal
            classes.push(ConjClass {
                rep: elements[members[0]].clone(),
                size: members.len(),
            });
        }
        classes.sort_by(|a, b| a.rep.cmp(&b.rep));
        let identity_class = classes
            .iter()
            .position(|c| c.rep.is_identity())
            .expect("identity is always present");
        PermGroup {
            degree,
            elements,
            classes,
            identity_class,
        }
    }

    pub fn symmetric(n: usize) -> PermGroup {
        if n <= 1 {
            return PermGroup::trivial(n.max(1));
        }
        let gens = vec![
            Perm::from_cycles(n, &[vec![1, 2]]).expect("valid cycle"),
            Perm::from_cycles(n, &[(1..=n).collect()]).expect("valid cycle"),
        ];
        PermGroup::from_generators(n, &gens, usize::MAX).expect("uncapped")
    }

    pub fn cyclic(n: usize) -> PermGroup {
        if n <= 1 {
            return PermGroup::trivial(n.max(1));
        }
        let gens = vec![Perm::from_cycles(n, &[(1..=n).collect()]).expect("valid cycle")];
        PermGroup::from_generators(n, &gens, usize::MAX).expect("uncapped")
    }

    pub fn trivial(n: usize) -> PermGroup {
        PermGroup::with_classes(n, vec![Perm::identity(n)])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn identity_class(&self) -> usize {
        self.identity_class
    }

    /// Members of each class, for tests that need more than the rep.
    pub fn class_members(&self) -> Vec<Vec<&Perm>> {
        let mut out = vec![Vec::new(); self.classes.len()];
        let index: HashMap<&Perm, usize> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut assigned = vec![usize::MAX; self.elements.len()];
        for (cid, class) in self.classes.iter().enumerate() {
            let start = index[&class.rep];
            for h in &self.elements {
                let conj = h.inverse().compose(&self.elements[start]).compose(h);
                let j = index[&conj];
                if assigned[j] == usize::MAX {
                    assigned[j] = cid;
                    out[cid].push(&self.elements[j]);
                }
            }
        }
        out
    }

    /// True when this group is the full symmetric group on its degree.
    pub fn is_full_symmetric(&self) -> bool {
        let mut fact = 1usize;
        for k in 2..=self.degree {
            fact = fact.saturating_mul(k);
        }
        self.order() == fact
    }
}

/// JSON description of a permutation group.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Named {
        named: String,
    },
    Generators {
        n: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupSpec {
    /// Build the group for a ground set of size `n`; named specs are
    /// `"symmetric"`, `"cyclic"`, or `"trivial"`.
    pub fn build(&self, n: usize, cap: usize) -> Result<PermGroup, EquivariantError> {
        match self {
            GroupSpec::Named { named } => match named.as_str() {
                "symmetric" => Ok(PermGroup::symmetric(n)),
                "cyclic" => Ok(PermGroup::cyclic(n)),
                "trivial" => Ok(PermGroup::trivial(n)),
                _ => Err(EquivariantError::NotABijection),
            },
            GroupSpec::Generators { n: deg, generators } => {
                let mut gens = Vec::new();
                for images in generators {
                    let p = Perm::from_one_line_1based(images)
                        .map_err(|_| EquivariantError::NotABijection)?;
                    gens.push(p);
                }
                PermGroup::from_generators(*deg, &gens, cap)
            }
        }
    }
}

/// An integer value per conjugacy class (virtual characters allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<BigInt>,
}

impl ClassFunction {
    pub fn zero(classes: usize) -> Self {
        ClassFunction {
            values: vec![BigInt::zero(); classes],
        }
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.values
                .iter()
                .map(|v| Value::String(v.to_string()))
                .collect(),
        )
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// True when the permutation maps every flat to a flat of equal rank.
pub fn check_automorphism(lattice: &FlatLattice, g: &Perm) -> bool {
    if g.degree() != lattice.n() {
        return false;
    }
    lattice.flats().iter().all(|f| {
        lattice
            .index_of(g.act_on_set(f.set))
            .is_some_and(|j| lattice.flat(j).rank == f.rank)
    })
}

fn ensure_all_automorphisms(
    lattice: &FlatLattice,
    group: &PermGroup,
) -> Result<(), EquivariantError> {
    for g in group.elements() {
        if !check_automorphism(lattice, g) {
            return Err(EquivariantError::NotAnAutomorphism {
                element: g.to_string(),
            });
        }
    }
    Ok(())
}

/// Number of maximal chains of the rank selection fixed flat-wise by a
/// single permutation (a dynamic program over the selected ranks).
pub fn fixed_chain_count(lattice: &FlatLattice, ranks: &[usize], g: &Perm) -> BigInt {
    let fixed_at = |r: usize| -> Vec<usize> {
        lattice
            .at_rank(r)
            .iter()
            .copied()
            .filter(|&i| g.act_on_set(lattice.flat(i).set) == lattice.flat(i).set)
            .collect()
    };
    let mut sorted = ranks.to_vec();
    sorted.sort_unstable();
    // weights[i] = number of fixed chains ending at the i-th fixed flat
    let mut level: Vec<(usize, BigInt)> = vec![];
    for (step, &r) in sorted.iter().enumerate() {
        let fixed = fixed_at(r);
        let mut next: Vec<(usize, BigInt)> = Vec::with_capacity(fixed.len());
        for &f in &fixed {
            let weight: BigInt = if step == 0 {
                BigInt::from(1)
            } else {
                level
                    .iter()
                    .filter(|&&(prev, _)| lattice.leq(prev, f))
                    .map(|(_, w)| w)
                    .sum()
            };
            next.push((f, weight));
        }
        level = next;
    }
    if sorted.is_empty() {
        BigInt::from(1) // the empty chain
    } else {
        level.into_iter().map(|(_, w)| w).sum()
    }
}

/// Permutation character of the group on the maximal chains of the
/// rank selection.
pub fn alpha_character(
    lattice: &FlatLattice,
    ranks: &[usize],
    group: &PermGroup,
) -> Result<ClassFunction, EquivariantError> {
    ensure_all_automorphisms(lattice, group)?;
    Ok(alpha_character_unchecked(lattice, ranks, group))
}

fn alpha_character_unchecked(
    lattice: &FlatLattice,
    ranks: &[usize],
    group: &PermGroup,
) -> ClassFunction {
    let values = group
        .classes()
        .par_iter()
        .map(|c| fixed_chain_count(lattice, ranks, &c.rep))
        .collect();
    ClassFunction { values }
}

/// Inclusion-exclusion transform of the chain characters over subsets
/// of the rank selection. The Moebius round trip (the subset sums of
/// the transform reproduce the chain character) is re-verified here.
pub fn beta_character(
    lattice: &FlatLattice,
    ranks: &[usize],
    group: &PermGroup,
) -> Result<ClassFunction, EquivariantError> {
    ensure_all_automorphisms(lattice, group)?;
    Ok(beta_character_unchecked(lattice, ranks, group))
}

fn beta_character_unchecked(
    lattice: &FlatLattice,
    ranks: &[usize],
    group: &PermGroup,
) -> ClassFunction {
    let mut sorted = ranks.to_vec();
    sorted.sort_unstable();
    let m = sorted.len();
    let alphas: Vec<ClassFunction> = (0usize..1 << m)
        .map(|mask| {
            let subset: Vec<usize> = (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| sorted[i])
                .collect();
            alpha_character_unchecked(lattice, &subset, group)
        })
        .collect();
    let full = (1 << m) - 1;
    // Moebius inversion round trip: the betas of all submasks must sum
    // back to the full chain character.
    let mut roundtrip = ClassFunction::zero(group.class_count());
    for mask in 0usize..=full {
        roundtrip = roundtrip.add(&inclusion_exclusion(&alphas, mask));
    }
    assert_eq!(
        roundtrip, alphas[full],
        "Moebius inversion round trip failed"
    );
    inclusion_exclusion(&alphas, full)
}

/// Signed subset sum of the alpha table over the submasks of `mask`.
fn inclusion_exclusion(alphas: &[ClassFunction], mask: usize) -> ClassFunction {
    let classes = alphas[0].values.len();
    let mut out = ClassFunction::zero(classes);
    let mut sub = mask;
    loop {
        let sign = ((mask as u64).count_ones() - (sub as u64).count_ones()) % 2;
        out = if sign == 0 {
            out.add(&alphas[sub])
        } else {
            out.sub(&alphas[sub])
        };
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    out
}

/// The character of each graded piece of the chosen basis: entry `d`
/// counts, per class, the monomials of degree `d` whose chain is fixed
/// flat-wise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqSeries {
    pub degrees: Vec<ClassFunction>,
}

impl EqSeries {
    /// The series on one class as a polynomial in `t`.
    pub fn class_poly(&self, class: usize) -> MVPoly {
        let coeffs: Vec<BigInt> = self
            .degrees
            .iter()
            .map(|cf| cf.values[class].clone())
            .collect();
        MVPoly::from_t_coeffs(&coeffs)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.degrees.iter().map(ClassFunction::to_json).collect())
    }
}

/// Equivariant Hilbert series from the permutation action on the
/// monomial basis.
pub fn equivariant_hilbert(
    lattice: &FlatLattice,
    group: &PermGroup,
    kind: RingKind,
) -> Result<EqSeries, EquivariantError> {
    ensure_all_automorphisms(lattice, group)?;
    let basis = fy_basis(lattice, kind);
    let per_class: Vec<Vec<BigInt>> = group
        .classes()
        .par_iter()
        .map(|class| {
            let fixed: Vec<bool> = (0..lattice.len())
                .map(|i| class.rep.act_on_set(lattice.flat(i).set) == lattice.flat(i).set)
                .collect();
            basis
                .by_degree
                .iter()
                .map(|level| {
                    BigInt::from(
                        level
                            .iter()
                            .filter(|m| m.chain.iter().all(|&f| fixed[f]))
                            .count(),
                    )
                })
                .collect()
        })
        .collect();
    let degrees = (0..basis.by_degree.len())
        .map(|d| ClassFunction {
            values: per_class.iter().map(|col| col[d].clone()).collect(),
        })
        .collect();
    Ok(EqSeries { degrees })
}

/// Classwise gamma extraction of a palindromic equivariant series.
pub fn equivariant_gamma(
    series: &EqSeries,
    degree: usize,
    group: &PermGroup,
) -> Result<Vec<ClassFunction>, EquivariantError> {
    let classes = group.class_count();
    let mut per_class_gammas: Vec<Vec<BigInt>> = Vec::with_capacity(classes);
    for c in 0..classes {
        let poly = series.class_poly(c);
        let gv = gamma_expand(&poly, degree).map_err(|e| match e {
            PolyError::NotPalindromic { index, .. } => EquivariantError::ClassPalindromyFailure {
                class: group.classes()[c].rep.to_string(),
                degree: index,
            },
            _ => EquivariantError::ClassPalindromyFailure {
                class: group.classes()[c].rep.to_string(),
                degree,
            },
        })?;
        per_class_gammas.push(
            gv.gamma
                .iter()
                .map(|g| g.coeff((0, 0, 0)))
                .collect(),
        );
    }
    let count = degree / 2 + 1;
    Ok((0..count)
        .map(|k| ClassFunction {
            values: per_class_gammas.iter().map(|g| g[k].clone()).collect(),
        })
        .collect())
}

/// Full verification of the gamma expansion of the equivariant Hilbert
/// series of the chosen ring:
///
/// 1. the series equals the beta expansion over the admissible window,
///    class by class;
/// 2. each gamma coefficient equals the sum of the beta characters of
///    the rank sets of its size;
/// 3. each beta character matches the trace of the group action on the
///    top homology of the rank selection, its dimension matches the top
///    Betti number, and the lower Betti numbers vanish;
/// 4. the gamma coefficients are nonnegative at the identity and the
///    scalar gamma vector is nonnegative.
pub fn verify_main_theorems(
    lattice: &FlatLattice,
    group: &PermGroup,
    kind: RingKind,
    label: &str,
) -> Result<VerificationReport, EquivariantError> {
    let kind_tag = match kind {
        RingKind::Chow => "chow",
        RingKind::Augmented => "augmented",
    };
    let mut report = VerificationReport::new(format!("main-theorems/{label}/{kind_tag}"));
    ensure_all_automorphisms(lattice, group)?;
    let r = lattice.rank();
    let degree = kind.top_degree(r);
    let (a, b) = kind.stab_window(r);
    let window = stab(a, b);

    let series = equivariant_hilbert(lattice, group, kind)?;

    // beta characters and homology data per rank set
    let mut betas: BTreeMap<Vec<usize>, ClassFunction> = BTreeMap::new();
    for set in &window {
        betas.insert(set.clone(), beta_character_unchecked(lattice, set, group));
    }

    // (1) series equals the beta expansion, class by class
    for (c, class) in group.classes().iter().enumerate() {
        let lhs = series.class_poly(c);
        let mut rhs = MVPoly::zero();
        for set in &window {
            let basis = MVPoly::var_pow(Var::T, set.len() as u32)
                .mul(&one_plus_t().pow((degree - 2 * set.len()) as u32));
            rhs = rhs.add(&basis.scale(&betas[set].values[c]));
        }
        report.check_eq(format!("series-eq-beta-expansion/class{c}-{}", class.rep), &lhs, &rhs);
    }

    // (2) gamma coefficients are the size-graded beta sums
    let gammas = equivariant_gamma(&series, degree, group)?;
    for (k, gamma_k) in gammas.iter().enumerate() {
        let mut expected = ClassFunction::zero(group.class_count());
        for set in window.iter().filter(|s| s.len() == k) {
            expected = expected.add(&betas[set]);
        }
        report.check_eq(format!("gamma{k}-eq-beta-sum"), gamma_k, &expected);
    }

    // (3) beta characters are homology characters
    let homology_checks: Vec<VerificationReport> = window
        .par_iter()
        .map(|set| {
            let mut sub = VerificationReport::new("homology");
            let label = format!(
                "S={{{}}}",
                set.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
            );
            let poset = lattice.rank_selected(set).expect("window inside [r-1]");
            let complex = OrderComplex::build(&poset);
            let betti = complex.reduced_betti();
            let top = set.len() as isize - 1;
            for d in -1..top {
                sub.check_that(
                    format!("betti-vanishing/{label}/dim{d}"),
                    betti.get(d) == 0,
                    "reduced homology below the top dimension must vanish",
                );
            }
            let beta = &betas[set];
            sub.check_eq(
                format!("beta-dimension-eq-top-betti/{label}"),
                &beta.values[group.identity_class()],
                &BigInt::from(betti.get(top)),
            );
            let mut traces = Vec::with_capacity(group.class_count());
            for class in group.classes() {
                traces.push(
                    complex
                        .top_homology_trace(lattice, &class.rep)
                        .expect("automorphisms verified above"),
                );
            }
            sub.check_eq(
                format!("beta-eq-homology-character/{label}"),
                beta,
                &ClassFunction { values: traces },
            );
            sub
        })
        .collect();
    for sub in homology_checks {
        report.merge(sub);
    }

    // (4) positivity witnesses
    for (k, gamma_k) in gammas.iter().enumerate() {
        report.check_that(
            format!("gamma{k}-identity-nonnegative"),
            !gamma_k.values[group.identity_class()].is_negative(),
            "gamma dimension must be nonnegative",
        );
    }
    let scalar = crate::chow::hilbert_series(lattice, kind);
    let scalar_gamma = gamma_expand(&scalar, degree).expect("palindromic by duality");
    report.check_that(
        "scalar-gamma-nonnegative",
        scalar_gamma.is_nonnegative(),
        "non-equivariant gamma vector must be nonnegative",
    );
    report.check_eq(
        "identity-class-eq-hilbert",
        &series.class_poly(group.identity_class()),
        &scalar,
    );

    Ok(report)
}

pub fn group_to_json(group: &PermGroup) -> Value {
    json!({
        "degree": group.degree(),
        "order": group.order(),
        "classes": group.classes().iter().map(|c| json!({
            "representative": c.rep.one_line_1based(),
            "size": c.size,
            "cycle_type": c.rep.cycle_type(),
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Matroid;

    fn b3() -> FlatLattice {
        FlatLattice::build(&Matroid::boolean(3).unwrap())
    }

    fn cf(values: &[i64]) -> ClassFunction {
        ClassFunction {
            values: values.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    #[test]
    fn symmetric_group_classes() {
        let g = PermGroup::symmetric(3);
        assert_eq!(g.order(), 6);
        assert_eq!(g.class_count(), 3);
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.size).collect();
        assert_eq!(sizes.iter().sum::<usize>(), 6);
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3]);
        assert!(g.is_full_symmetric());
        assert_eq!(g.identity_class(), 0);
    }

    #[test]
    fn cyclic_and_trivial_groups() {
        let c4 = PermGroup::cyclic(4);
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.class_count(), 4);
        let t = PermGroup::trivial(3);
        assert_eq!(t.order(), 1);
        assert_eq!(t.class_count(), 1);
    }

    #[test]
    fn group_cap_is_enforced() {
        let gens = vec![
            Perm::from_cycles(5, &[vec![1, 2]]).unwrap(),
            Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap(),
        ];
        assert!(matches!(
            PermGroup::from_generators(5, &gens, 100),
            Err(EquivariantError::GroupTooLarge { cap: 100 })
        ));
        assert_eq!(
            PermGroup::from_generators(5, &gens, 200).unwrap().order(),
            120
        );
    }

    #[test]
    fn uniform_matroids_are_fully_symmetric() {
        let l = FlatLattice::build(&Matroid::uniform(2, 4).unwrap());
        for g in PermGroup::symmetric(4).elements() {
            assert!(check_automorphism(&l, g));
        }
    }

    #[test]
    fn path_graph_swap_is_automorphism() {
        // edges a=(1,2), b=(2,3): swapping the edges comes from the
        // reflection of the path
        let m = Matroid::graphic(3, &[(1, 2), (2, 3)]).unwrap();
        let l = FlatLattice::build(&m);
        let swap = Perm::from_cycles(2, &[vec![1, 2]]).unwrap();
        assert!(check_automorphism(&l, &swap));
    }

    #[test]
    fn triangle_edge_permutations() {
        let m = Matroid::complete_graph(3).unwrap();
        let l = FlatLattice::build(&m);
        // all 2-cycles of edges are induced by vertex transpositions
        for cyc in [vec![1, 2], vec![1, 3], vec![2, 3]] {
            let g = Perm::from_cycles(3, &[cyc]).unwrap();
            assert!(check_automorphism(&l, &g));
        }
        // parallel-edge matroid: swapping a parallel pair with the
        // bridge is not an automorphism
        let m2 = Matroid::graphic(3, &[(1, 2), (1, 2), (2, 3)]).unwrap();
        let l2 = FlatLattice::build(&m2);
        let bad = Perm::from_cycles(3, &[vec![2, 3]]).unwrap();
        assert!(!check_automorphism(&l2, &bad));
    }

    #[test]
    fn alpha_characters_on_b3() {
        let l = b3();
        let g = PermGroup::symmetric(3);
        // classes sorted by lex-min rep: identity, transposition, 3-cycle
        assert_eq!(alpha_character(&l, &[1], &g).unwrap(), cf(&[3, 1, 0]));
        assert_eq!(alpha_character(&l, &[], &g).unwrap(), cf(&[1, 1, 1]));
        assert_eq!(alpha_character(&l, &[1, 2], &g).unwrap(), cf(&[6, 0, 0]));
    }

    #[test]
    fn beta_characters_on_b3() {
        let l = b3();
        let g = PermGroup::symmetric(3);
        assert_eq!(beta_character(&l, &[1], &g).unwrap(), cf(&[2, 0, -1]));
        assert_eq!(beta_character(&l, &[], &g).unwrap(), cf(&[1, 1, 1]));
        // the sign character
        assert_eq!(beta_character(&l, &[1, 2], &g).unwrap(), cf(&[1, -1, 1]));
    }

    #[test]
    fn class_rep_order_on_s3() {
        let g = PermGroup::symmetric(3);
        let reps: Vec<Vec<usize>> = g.classes().iter().map(|c| c.rep.one_line_1based()).collect();
        assert_eq!(reps, vec![vec![1, 2, 3], vec![1, 3, 2], vec![2, 3, 1]]);
    }

    #[test]
    fn equivariant_hilbert_examples() {
        let l = FlatLattice::build(&Matroid::uniform(2, 3).unwrap());
        let g = PermGroup::symmetric(3);
        let e = equivariant_hilbert(&l, &g, RingKind::Chow).unwrap();
        // degree 1 is spanned by the top monomial, fixed by everything
        assert_eq!(e.degrees[1], cf(&[1, 1, 1]));

        let l = b3();
        let e = equivariant_hilbert(&l, &g, RingKind::Chow).unwrap();
        assert_eq!(e.degrees[1].values[g.identity_class()], BigInt::from(4));

        // the trivial group collapses to the plain Hilbert series
        let t = PermGroup::trivial(3);
        let e = equivariant_hilbert(&l, &t, RingKind::Chow).unwrap();
        assert_eq!(e.class_poly(0), crate::chow::hilbert_series(&l, RingKind::Chow));
    }

    #[test]
    fn equivariant_gamma_on_b3() {
        let l = b3();
        let g = PermGroup::symmetric(3);
        let e = equivariant_hilbert(&l, &g, RingKind::Chow).unwrap();
        let gamma = equivariant_gamma(&e, 2, &g).unwrap();
        assert_eq!(gamma.len(), 2);
        assert_eq!(gamma[0], cf(&[1, 1, 1]));
        // gamma_1 = beta({2})
        assert_eq!(gamma[1], beta_character(&l, &[2], &g).unwrap());
    }

    #[test]
    fn gamma_of_scalar_series() {
        // trivial group, 1 + 4t + t^2 -> gamma = [1, 2]
        let series = EqSeries {
            degrees: vec![cf(&[1]), cf(&[4]), cf(&[1])],
        };
        let g = PermGroup::trivial(1);
        let gamma = equivariant_gamma(&series, 2, &g).unwrap();
        assert_eq!(gamma, vec![cf(&[1]), cf(&[2])]);

        let bad = EqSeries {
            degrees: vec![cf(&[1]), cf(&[2])],
        };
        assert!(matches!(
            equivariant_gamma(&bad, 1, &g),
            Err(EquivariantError::ClassPalindromyFailure { .. })
        ));
    }

    #[test]
    fn moebius_round_trip() {
        let l = FlatLattice::build(&Matroid::uniform(3, 4).unwrap());
        let g = PermGroup::symmetric(4);
        for set in [vec![], vec![1], vec![2], vec![1, 2]] {
            let alpha = alpha_character(&l, &set, &g).unwrap();
            // sum of betas over subsets
            let mut total = ClassFunction::zero(g.class_count());
            for mask in 0u64..(1 << set.len()) {
                let sub: Vec<usize> = (0..set.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| set[i])
                    .collect();
                total = total.add(&beta_character(&l, &sub, &g).unwrap());
            }
            assert_eq!(alpha, total, "S={set:?}");
        }
    }

    #[test]
    fn character_constant_on_classes() {
        let l = FlatLattice::build(&Matroid::uniform(3, 5).unwrap());
        let g = PermGroup::symmetric(5);
        let members = g.class_members();
        for (cid, class_members) in members.iter().enumerate() {
            let expected = fixed_chain_count(&l, &[1, 2], class_members[0]);
            // sample a second member when available
            if let Some(other) = class_members.get(class_members.len() / 2) {
                assert_eq!(fixed_chain_count(&l, &[1, 2], other), expected, "class {cid}");
            }
        }
    }

    #[test]
    fn main_theorem_reports() {
        let g3 = PermGroup::symmetric(3);
        let l_u23 = FlatLattice::build(&Matroid::uniform(2, 3).unwrap());
        let rep = verify_main_theorems(&l_u23, &g3, RingKind::Chow, "U(2,3)").unwrap();
        assert!(rep.passed(), "{}", rep.to_text());

        let l_b3 = b3();
        for kind in [RingKind::Chow, RingKind::Augmented] {
            let rep = verify_main_theorems(&l_b3, &g3, kind, "B3").unwrap();
            assert!(rep.passed(), "{}", rep.to_text());
        }
    }

    #[test]
    fn non_automorphism_group_is_rejected() {
        let m = Matroid::graphic(3, &[(1, 2), (1, 2), (2, 3)]).unwrap();
        let l = FlatLattice::build(&m);
        let g = PermGroup::symmetric(3); // acts on the 3 edges, not an automorphism group
        assert!(matches!(
            alpha_character(&l, &[1], &g),
            Err(EquivariantError::NotAnAutomorphism { .. })
        ));
    }
}
