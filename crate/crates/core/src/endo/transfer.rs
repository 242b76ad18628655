//! Transfer between a module and its endomorphism ring: the split-epi
//! criterion for complement projections, and the passage of surjectivity,
//! summand status, isomorphism, superfluous kernels, and projective-cover
//! conditions between M and E = End(M). Each equivalence is decided on
//! both sides independently; a disagreement is reported as an error, never
//! absorbed into the verdict.

use std::sync::Arc;

use crate::module::cover::is_superfluous;
use crate::module::hom::{hom_set, is_isomorphic};
use crate::module::{quotient_module, submodules, FiniteModule, ModuleError, Submodule};
use crate::report::{Check, Report};
use crate::ring::analysis::idempotents;
use crate::ring::{Caps, RightIdealSet};

use super::quasi::is_quasi_projective;
use super::ring::{sorted_intersection, EndoRing, ENDO_MODULE_CAP};

/// Position of a parent element inside an ascending member list; the
/// carrier of a submodule indexes its elements in exactly this order.
fn member_pos(members: &[u32], x: usize) -> usize {
    members
        .binary_search(&(x as u32))
        .expect("element must belong to the member list")
}

/// Whether the canonical surjection onto the quotient stays onto when
/// restricted to the given member set of the parent.
pub(crate) fn restriction_onto(q: &Arc<FiniteModule>, members: &[u32]) -> bool {
    let mut hit = vec![false; q.size()];
    let mut count = 0;
    for &x in members {
        let c = q.coset_of(x as usize).expect("quotient carrier projects");
        if !hit[c] {
            hit[c] = true;
            count += 1;
        }
    }
    count == q.size()
}

/// Whether a member set admits a direct complement in the given submodule
/// list: some B with trivial intersection and complementary size.
pub(crate) fn has_complement(size: usize, members: &[u32], subs: &[Submodule]) -> bool {
    subs.iter().any(|b| {
        members.len() * b.len() == size
            && sorted_intersection(members, b.members()) == [0]
    })
}

/// Both sides of the split-epi criterion for a pair (e, s): whether the
/// composite of s with the projection onto (1−e)(M) admits a section, and
/// whether eE + sE = E. The two computations share nothing; agreement is
/// asserted and a mismatch surfaces as an error.
pub(crate) struct SplitEpiDecision {
    pub split: bool,
    pub section: Option<Vec<u32>>,
}

pub(crate) fn split_epi_decision(
    endo: &EndoRing,
    e: usize,
    s: usize,
) -> Result<SplitEpiDecision, ModuleError> {
    let m = endo.module();
    let er = endo.ring();
    let c = endo.complement(e);
    let m2 = endo.image_submodule(c);
    let carrier = m2.carrier(m, format!("cmpl#{e}({})", m.label()));
    let s_map = endo.hom(s).image_vector();
    let p_map = endo.hom(c).image_vector();
    let mut section: Option<Vec<u32>> = None;
    'search: for t in hom_set(&carrier, m, ENDO_MODULE_CAP)? {
        for y in 0..carrier.size() {
            let x = t.apply(y);
            let z = p_map[s_map[x] as usize] as usize;
            if member_pos(m2.members(), z) != y {
                continue 'search;
            }
        }
        section = Some(t.image_vector().to_vec());
        break;
    }
    let module_side = section.is_some();
    let ring_side = RightIdealSet::sum(
        er,
        &RightIdealSet::principal(er, e),
        &RightIdealSet::principal(er, s),
    )
    .is_full(er);
    if module_side != ring_side {
        return Err(ModuleError::EquivalenceViolation {
            context: format!(
                "split-epi criterion: section search gives {module_side}, residual \
                 generation gives {ring_side} at e={}, s={} over {}",
                er.display(e),
                er.display(s),
                m.label()
            ),
        });
    }
    Ok(SplitEpiDecision {
        split: module_side,
        section,
    })
}

/// Report form of the split-epi criterion for one idempotent–endomorphism
/// pair. Requires e to be idempotent; the two sides are decided
/// independently and must agree.
pub fn split_epi_equivalence(
    endo: &EndoRing,
    e: usize,
    s: usize,
) -> Result<Report, ModuleError> {
    if !endo.is_idempotent(e) {
        return Err(ModuleError::HypothesisViolated {
            which: "idempotent endomorphism",
        });
    }
    let d = split_epi_decision(endo, e, s)?;
    let er = endo.ring();
    let mut detail = format!(
        "section search over homomorphisms (1-e)(M) -> M and residual generation \
         eE + sE = E agree at e={}, s={} over M={}",
        er.display(e),
        er.display(s),
        endo.module().label()
    );
    if let Some(t) = &d.section {
        detail.push_str(&format!("; section image vector {t:?}"));
    }
    let mut report = Report::new("endo split-epi");
    report.push(
        Check::verified("split-epi-agreement")
            .with_witness(format!("split={}", d.split))
            .with_detail(detail),
    );
    Ok(report)
}

/// The four transfer equivalences between M and E = End(M), each swept
/// exhaustively: surjectivity onto M/s(M) versus residual generation
/// (all g), summand status (all g), isomorphism of idempotent images
/// (all pairs), and superfluous kernels (all idempotents). Requires M
/// quasi-projective.
pub fn lemma_endo_suite(
    endo: &EndoRing,
    s: usize,
    caps: &Caps,
) -> Result<Report, ModuleError> {
    if !is_quasi_projective(endo.module(), caps)? {
        return Err(ModuleError::HypothesisViolated {
            which: "quasi-projective module",
        });
    }
    let m = endo.module();
    let er = endo.ring();
    let regular = FiniteModule::regular(Arc::clone(er));
    let m_subs = submodules(m, caps.submodule_enum)?;
    let e_subs = submodules(&regular, caps.submodule_enum)?;
    let s_image = endo.image_submodule(s);
    let q = quotient_module(m, &s_image);
    let s_ideal = RightIdealSet::principal(er, s);
    let idem = endo.idempotent_elements();

    let mut report = Report::new("endo lemma-suite");
    report.push(
        Check::verified("hypothesis-quasi-projective")
            .with_witness(m.label().to_string()),
    );

    // Surjectivity transfer: the restriction of M -> M/s(M) to g(M) is
    // onto exactly when gE + sE = E.
    let mut onto_count = 0usize;
    for g in 0..endo.order() {
        let module_side = restriction_onto(&q, endo.image_submodule(g).members());
        let ring_side =
            RightIdealSet::sum(er, &RightIdealSet::principal(er, g), &s_ideal)
                .is_full(er);
        if module_side != ring_side {
            return Err(ModuleError::EquivalenceViolation {
                context: format!(
                    "surjectivity transfer: module side {module_side}, ring side \
                     {ring_side} at g={} over {}",
                    er.display(g),
                    m.label()
                ),
            });
        }
        if module_side {
            onto_count += 1;
        }
    }
    report.push(
        Check::verified("surjectivity-transfer")
            .with_witness(format!("{onto_count}/{} onto", endo.order()))
            .with_detail(
                "restriction of the canonical surjection to g(M) versus \
                 gE + sE = E, decided independently for every g"
                    .to_string(),
            ),
    );

    // Summand transfer: g(M) has a complement in M exactly when gE has a
    // complement among the right ideals of E.
    let mut summand_count = 0usize;
    for g in 0..endo.order() {
        let module_side =
            has_complement(m.size(), endo.image_submodule(g).members(), &m_subs);
        let ring_side = has_complement(
            er.order(),
            RightIdealSet::principal(er, g).members(),
            &e_subs,
        );
        if module_side != ring_side {
            return Err(ModuleError::EquivalenceViolation {
                context: format!(
                    "summand transfer: module side {module_side}, ring side \
                     {ring_side} at g={} over {}",
                    er.display(g),
                    m.label()
                ),
            });
        }
        if module_side {
            summand_count += 1;
        }
    }
    report.push(
        Check::verified("summand-transfer")
            .with_witness(format!("{summand_count}/{} summands", endo.order()))
            .with_detail(
                "complement search in the submodule lattice of M versus the \
                 right-ideal lattice of E"
                    .to_string(),
            ),
    );

    // Isomorphism transfer: e(M) ≅ e'(M) exactly when eE ≅ e'E, over all
    // idempotent pairs.
    let m_carriers: Vec<Arc<FiniteModule>> = idem
        .iter()
        .map(|&e| {
            endo.image_submodule(e)
                .carrier(m, format!("im#{e}({})", m.label()))
        })
        .collect();
    let e_carriers: Vec<Arc<FiniteModule>> = idem
        .iter()
        .map(|&e| {
            let ideal = RightIdealSet::principal(er, e);
            FiniteModule::submodule_carrier(
                &regular,
                ideal.members().to_vec(),
                format!("ideal#{e}(E)"),
            )
        })
        .collect();
    let mut iso_pairs = 0usize;
    for i in 0..idem.len() {
        for j in i..idem.len() {
            let module_side =
                is_isomorphic(&m_carriers[i], &m_carriers[j], ENDO_MODULE_CAP)?
                    .is_some();
            let ring_side =
                is_isomorphic(&e_carriers[i], &e_carriers[j], ENDO_MODULE_CAP)?
                    .is_some();
            if module_side != ring_side {
                return Err(ModuleError::EquivalenceViolation {
                    context: format!(
                        "isomorphism transfer: module side {module_side}, ring side \
                         {ring_side} at e={}, e'={} over {}",
                        er.display(idem[i]),
                        er.display(idem[j]),
                        m.label()
                    ),
                });
            }
            if module_side {
                iso_pairs += 1;
            }
        }
    }
    report.push(
        Check::verified("isomorphism-transfer")
            .with_witness(format!(
                "{iso_pairs} isomorphic pairs among {} idempotents",
                idem.len()
            ))
            .with_detail(
                "e(M) isomorphic to e'(M) versus eE isomorphic to e'E, both decided \
                 by exhaustive isomorphism search"
                    .to_string(),
            ),
    );

    // Superfluous-kernel transfer: the kernel of the restriction to e(M)
    // is superfluous in e(M) exactly when eE ∩ sE is superfluous in eE.
    let mut superfluous_count = 0usize;
    for (i, &e) in idem.iter().enumerate() {
        let im = endo.image_submodule(e);
        let kernel_members = sorted_intersection(im.members(), s_image.members());
        let k_pos: Vec<u32> = kernel_members
            .iter()
            .map(|&x| member_pos(im.members(), x as usize) as u32)
            .collect();
        let k_sub = Submodule::from_parts(k_pos.clone(), k_pos);
        let module_side = is_superfluous(&k_sub, &m_carriers[i], caps.submodule_enum)?;

        let e_ideal = RightIdealSet::principal(er, e);
        let meet = RightIdealSet::intersect(er, &e_ideal, &s_ideal);
        let k_ring_pos: Vec<u32> = meet
            .members()
            .iter()
            .map(|&x| member_pos(e_ideal.members(), x as usize) as u32)
            .collect();
        let k_ring_sub = Submodule::from_parts(k_ring_pos.clone(), k_ring_pos);
        let ring_side =
            is_superfluous(&k_ring_sub, &e_carriers[i], caps.submodule_enum)?;

        if module_side != ring_side {
            return Err(ModuleError::EquivalenceViolation {
                context: format!(
                    "superfluous-kernel transfer: module side {module_side}, ring \
                     side {ring_side} at e={} over {}",
                    er.display(e),
                    m.label()
                ),
            });
        }
        if module_side {
            superfluous_count += 1;
        }
    }
    report.push(
        Check::verified("superfluous-kernel-transfer")
            .with_witness(format!(
                "{superfluous_count}/{} superfluous kernels",
                idem.len()
            ))
            .with_detail(
                "kernel of the restricted surjection inside e(M) versus the meet \
                 of eE and sE inside eE, both via exhaustive superfluity"
                    .to_string(),
            ),
    );
    Ok(report)
}

/// Cover transfer: for a projective module M (verified to be isomorphic to
/// a cyclic idempotent summand fR of its base ring) and each idempotent
/// e of E, the restricted surjection e(M) -> M/s(M) is a projective cover
/// exactly when eE -> E/sE is one. Both sides are conjunctions of an
/// independent surjectivity test and an independent superfluity test.
pub fn cover_transfer_check(
    endo: &EndoRing,
    s: usize,
    caps: &Caps,
) -> Result<Report, ModuleError> {
    let m = endo.module();
    let base = m.ring();
    let base_regular = FiniteModule::regular(Arc::clone(base));
    let mut projective_form: Option<usize> = None;
    for &f in idempotents(base) {
        let ideal = RightIdealSet::principal(base, f as usize);
        if ideal.len() != m.size() {
            continue;
        }
        let carrier = FiniteModule::submodule_carrier(
            &base_regular,
            ideal.members().to_vec(),
            format!("({})R", base.display(f as usize)),
        );
        if is_isomorphic(m, &carrier, ENDO_MODULE_CAP)?.is_some() {
            projective_form = Some(f as usize);
            break;
        }
    }
    let Some(f) = projective_form else {
        return Err(ModuleError::HypothesisViolated {
            which: "projective module of cyclic idempotent form",
        });
    };

    let er = endo.ring();
    let regular = FiniteModule::regular(Arc::clone(er));
    let s_image = endo.image_submodule(s);
    let q = quotient_module(m, &s_image);
    let s_ideal = RightIdealSet::principal(er, s);

    let mut report = Report::new("endo cover-transfer");
    report.push(
        Check::verified("projective-input")
            .with_witness(format!("M = ({})R up to isomorphism", base.display(f)))
            .with_detail(format!(
                "{} is isomorphic to a cyclic idempotent summand of {}",
                m.label(),
                base.spec()
            )),
    );

    let mut covering: Vec<usize> = Vec::new();
    for e in endo.idempotent_elements() {
        let im = endo.image_submodule(e);
        let carrier = im.carrier(m, format!("im#{e}({})", m.label()));
        let module_onto = restriction_onto(&q, im.members());
        let kernel_members = sorted_intersection(im.members(), s_image.members());
        let k_pos: Vec<u32> = kernel_members
            .iter()
            .map(|&x| member_pos(im.members(), x as usize) as u32)
            .collect();
        let k_sub = Submodule::from_parts(k_pos.clone(), k_pos);
        let module_cover =
            module_onto && is_superfluous(&k_sub, &carrier, caps.submodule_enum)?;

        let e_ideal = RightIdealSet::principal(er, e);
        let e_carrier = FiniteModule::submodule_carrier(
            &regular,
            e_ideal.members().to_vec(),
            format!("ideal#{e}(E)"),
        );
        let ring_onto = RightIdealSet::sum(er, &e_ideal, &s_ideal).is_full(er);
        let meet = RightIdealSet::intersect(er, &e_ideal, &s_ideal);
        let k_ring_pos: Vec<u32> = meet
            .members()
            .iter()
            .map(|&x| member_pos(e_ideal.members(), x as usize) as u32)
            .collect();
        let k_ring_sub = Submodule::from_parts(k_ring_pos.clone(), k_ring_pos);
        let ring_cover =
            ring_onto && is_superfluous(&k_ring_sub, &e_carrier, caps.submodule_enum)?;

        if module_cover != ring_cover {
            return Err(ModuleError::EquivalenceViolation {
                context: format!(
                    "cover transfer: module side {module_cover}, ring side \
                     {ring_cover} at e={} over {}",
                    er.display(e),
                    m.label()
                ),
            });
        }
        if module_cover {
            covering.push(e);
        }
    }
    let shown: Vec<String> = covering.iter().map(|&e| er.display(e)).collect();
    report.push(
        Check::verified("cover-agreement")
            .with_witness(format!(
                "{} covering idempotents among {}",
                covering.len(),
                endo.idempotent_elements().len()
            ))
            .with_detail(format!(
                "both sides name the same covering idempotents: [{}]",
                shown.join(", ")
            )),
    );
    Ok(report)
}
