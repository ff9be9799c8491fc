use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{build_maps_with, partition, ReductionMaps};
use crate::center::{coweight_quotient, rho, weight_quotient, GroupHom};
use crate::error::Result;
use crate::fault::Fault;
use crate::report::{Report, Verdict};
use crate::rootsys::phi::fmt_vec;
use crate::rootsys::{BasisKind, RootSystem};
use crate::zlinalg::{solve_in_lattice, IntMatrix};

fn unit(n: usize, j: usize) -> Vec<BigRational> {
    let mut e = vec![BigRational::zero(); n];
    e[j] = BigRational::one();
    e
}

pub fn verify_lemma2(r: &RootSystem) -> Result<Report> {
    verify_lemma2_with(r, &[])
}

/// Verdicts `lemma2.inclusion`, `lemma2.diagram` and `lemma2.decomposition`,
/// preceded by `lemma2.partition`.
pub fn verify_lemma2_with(r: &RootSystem, faults: &[Fault]) -> Result<Report> {
    let p = partition(r)?;
    let maps = build_maps_with(&p, faults)?;
    let mut report = Report::default();
    report.push(check_multipliers(&maps));
    report.push(check_inclusion(r, &maps)?);
    report.push(check_diagram(r, &maps)?);
    report.push(check_decomposition(r, &maps)?);
    Ok(report)
}

fn check_multipliers(maps: &ReductionMaps) -> Verdict {
    let r = maps.partition().system();
    let mut failures = Vec::new();
    for c in maps.partition().components() {
        if !(1..=3).contains(&c.d) || c.nodes.iter().any(|&v| r.d_coroot()[v] != c.d) {
            failures.push(format!("component {:?} has d = {}", c.nodes, c.d));
        }
    }
    Verdict::from_failures("lemma2.partition", failures)
}

/// `(t ∘ phi' ∘ s - phi)(f_j^vee)` lies in the root lattice for every `j`.
fn check_inclusion(r: &RootSystem, maps: &ReductionMaps) -> Result<Verdict> {
    let phi = r.phi_on_weights();
    let phi_primed = maps.primed().phi_on_weights();
    let via = maps.t().compose(&phi_primed.compose(maps.s())?)?;
    let diff = via.difference(&phi)?;
    let mut failures = Vec::new();
    for j in 0..r.rank() {
        let v = diff.apply(&unit(r.rank(), j));
        if !r.in_root_lattice(&v)? {
            failures.push(format!(
                "(t phi' s - phi)(f{}v) = {} on fundamental weights, not in the root lattice",
                j + 1,
                fmt_vec(&v)
            ));
        }
    }
    Ok(Verdict::from_failures("lemma2.inclusion", failures))
}

/// `phi ∘ t^vee = t ∘ phi'` on lattices, and on `Delta'^vee -> Delta` the
/// induced maps `rho ∘ t^vee` and `t ∘ rho'` agree.
fn check_diagram(r: &RootSystem, maps: &ReductionMaps) -> Result<Verdict> {
    const CHECK: &str = "lemma2.diagram";
    let left = r.phi_on_weights().compose(maps.t_dual())?;
    let right = maps.t().compose(&maps.primed().phi_on_weights())?;
    for (p, &v) in maps.primed_nodes().iter().enumerate() {
        let l = left.matrix().column(p);
        let rt = right.matrix().column(p);
        if l != rt {
            return Ok(Verdict::fail(
                CHECK,
                format!(
                    "node {}: phi t^vee gives {}, t phi' gives {}",
                    v + 1,
                    fmt_vec(&l),
                    fmt_vec(&rt)
                ),
            ));
        }
    }
    let delta = weight_quotient(r)?;
    let delta_primed = weight_quotient(maps.primed())?;
    let dual_primed = coweight_quotient(maps.primed())?;
    let lhs = match GroupHom::induced(&dual_primed, &delta, left.matrix()) {
        Ok(h) => h,
        Err(e) => return Ok(Verdict::fail(CHECK, format!("rho t^vee: {e}"))),
    };
    let t_bar = match GroupHom::induced(&delta_primed, &delta, maps.t().matrix()) {
        Ok(h) => h,
        Err(e) => return Ok(Verdict::fail(CHECK, format!("t: {e}"))),
    };
    let rhs = t_bar.compose(&rho(maps.primed())?)?;
    Ok(match first_disagreement(&lhs, &rhs) {
        None => Verdict::pass(CHECK),
        Some(x) => Verdict::fail(CHECK, format!("rho t^vee and t rho' differ at {x:?}")),
    })
}

/// `rho = (sum_i d_i j_i°) ∘ rho' ∘ j`, compared on every element.
fn check_decomposition(r: &RootSystem, maps: &ReductionMaps) -> Result<Verdict> {
    const CHECK: &str = "lemma2.decomposition";
    let delta = weight_quotient(r)?;
    let dual = coweight_quotient(r)?;
    let delta_primed = weight_quotient(maps.primed())?;
    let dual_primed = coweight_quotient(maps.primed())?;
    let j = match GroupHom::induced(&dual, &dual_primed, maps.s().matrix()) {
        Ok(h) => h,
        Err(e) => return Ok(Verdict::fail(CHECK, format!("j: {e}"))),
    };
    let mut outer = GroupHom::zero(delta_primed.clone(), delta.clone());
    for (i, &k) in maps.multipliers().iter().enumerate() {
        let emb = maps.component_embedding(i);
        let ji = match GroupHom::induced(&delta_primed, &delta, emb.matrix()) {
            Ok(h) => h,
            Err(e) => return Ok(Verdict::fail(CHECK, format!("j_{}°: {e}", i + 1))),
        };
        outer = outer.sum(&ji.times(u64::from(k)));
    }
    let composite = outer.compose(&rho(maps.primed())?.compose(&j)?)?;
    let expected = rho(r)?;
    Ok(match first_disagreement(&composite, &expected) {
        None => Verdict::pass(CHECK),
        Some(x) => Verdict::fail(
            CHECK,
            format!(
                "at {x:?}: composition gives {:?}, rho gives {:?}",
                composite.apply(&x),
                expected.apply(&x)
            ),
        ),
    })
}

fn first_disagreement(a: &GroupHom, b: &GroupHom) -> Option<Vec<u64>> {
    a.source().elements().find(|x| a.apply(x) != b.apply(x))
}

/// `(t^vee ∘ s)(x) - x` lies in the span of the `f_a^vee` with `a` in
/// `pi_r` plus the coroot lattice, for every fundamental coweight `x`.
pub fn claim_check(r: &RootSystem) -> Result<Report> {
    let p = partition(r)?;
    let maps = build_maps_with(&p, &[])?;
    let n = r.rank();
    let composite = maps.t_dual().compose(maps.s())?;
    let id = r.basis_change(BasisKind::FundamentalCoweights, BasisKind::FundamentalCoweights)?;
    let diff = composite.difference(&id)?;

    let mut m = IntMatrix::zeros(n, p.pi_r().len() + n);
    for (k, &a) in p.pi_r().iter().enumerate() {
        m[(a, k)] = 1.into();
    }
    for i in 0..n {
        for j in 0..n {
            m[(i, p.pi_r().len() + j)] = r.cartan()[(i, j)].clone();
        }
    }

    let mut failures = Vec::new();
    for j in 0..n {
        let v = diff.apply(&unit(n, j));
        if solve_in_lattice(&m, &v)?.is_none() {
            failures.push(format!("(t^vee s)(f{0}v) - f{0}v = {1}", j + 1, fmt_vec(&v)));
        }
    }
    let mut report = Report::default();
    report.push(Verdict::from_failures("lemma2.claim", failures));
    Ok(report)
}
