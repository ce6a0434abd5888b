//! Permutation checks: bijections of finite sets of field elements, the
//! subgroups `mu_d` of d-th roots of unity, and the Park-Lee/Zieve
//! criterion for polynomials of the form `x^r h(x^((3^(2k)-1)/d))`.

use std::collections::{HashMap, HashSet};

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf3m::{divides_group, FieldCtx, FieldElement};
use crate::polyring::Poly;

/// The cyclic subgroup of d-th roots of unity.
#[derive(Clone, Debug)]
pub struct UnityGroup {
    d: u64,
    /// Ascending by encoding.
    elements: Vec<FieldElement>,
    members: HashSet<FieldElement>,
}

impl UnityGroup {
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        self.members.contains(&x)
    }

    pub fn iter(&self) -> impl Iterator<Item = FieldElement> + '_ {
        self.elements.iter().copied()
    }
}

/// `mu_d` as the powers of `alpha^((3^(2k)-1)/d)`, sorted by encoding.
pub fn mu_enumerate(ctx: &FieldCtx, d: u64) -> Result<UnityGroup> {
    if !divides_group(ctx, d) {
        return Err(Error::NotSubgroupOrder {
            d,
            order: ctx.group_order(),
        });
    }
    let generator = ctx.pow(ctx.primitive_element(), ctx.group_order() / d);
    let mut elements = Vec::with_capacity(d as usize);
    let mut z = FieldElement::ONE;
    for _ in 0..d {
        elements.push(z);
        z = ctx.mul(z, generator);
    }
    elements.sort_unstable();
    let members = elements.iter().copied().collect();
    Ok(UnityGroup {
        d,
        elements,
        members,
    })
}

/// `mu_(q+1)`, the unit circle of GF(q^2) over GF(q).
pub fn mu_q_plus_1(ctx: &FieldCtx) -> UnityGroup {
    mu_enumerate(ctx, ctx.q() + 1).expect("q + 1 divides q^2 - 1")
}

/// Outcome of a bijection check of a map from a finite set to itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapReport {
    pub is_bijection: bool,
    /// First `(x1, x2)` in encoding order of `x2` with `x1 < x2` and equal images.
    pub collision: Option<(FieldElement, FieldElement)>,
    /// Smallest domain element with an empty preimage.
    pub missed: Option<FieldElement>,
    /// First `(x, image)` whose image falls outside the domain.
    pub escaped: Option<(FieldElement, FieldElement)>,
    /// Largest preimage size over images inside the domain.
    pub max_fiber_size: usize,
}

/// Bit set over element encodings.
struct Presence {
    words: Vec<u64>,
}

impl Presence {
    fn new(universe: u64) -> Presence {
        Presence {
            words: vec![0; universe.div_ceil(64) as usize],
        }
    }

    /// Sets the bit, returning whether it was already set.
    fn insert(&mut self, x: FieldElement) -> bool {
        let n = x.encode();
        let (w, b) = ((n / 64) as usize, n % 64);
        let seen = (self.words[w] >> b) & 1 == 1;
        self.words[w] |= 1 << b;
        seen
    }

    fn contains(&self, x: FieldElement) -> bool {
        let n = x.encode();
        (self.words[(n / 64) as usize] >> (n % 64)) & 1 == 1
    }
}

/// Checks that `map` permutes `domain`. Images are computed in parallel;
/// the scan over them runs in encoding order, so the report does not depend
/// on the number of workers.
pub fn is_bijection_on<F>(ctx: &FieldCtx, map: F, domain: &[FieldElement]) -> MapReport
where
    F: Fn(FieldElement) -> FieldElement + Sync,
{
    let mut domain = domain.to_vec();
    domain.sort_unstable();
    domain.dedup();
    let images: Vec<FieldElement> = domain.par_iter().map(|&x| map(x)).collect();
    report_from_images(ctx, &domain, &images)
}

/// Bijection report from precomputed images; `domain` must be sorted and
/// free of duplicates, `images[i]` being the image of `domain[i]`.
pub fn report_from_images(
    ctx: &FieldCtx,
    domain: &[FieldElement],
    images: &[FieldElement],
) -> MapReport {
    debug_assert!(domain.windows(2).all(|w| w[0] < w[1]));
    let mut in_domain = Presence::new(ctx.order());
    for &x in domain {
        in_domain.insert(x);
    }
    let mut hit = Presence::new(ctx.order());
    let mut collision = None;
    let mut escaped = None;
    for (&x, &y) in domain.iter().zip(images) {
        if !in_domain.contains(y) {
            escaped.get_or_insert((x, y));
            continue;
        }
        if hit.insert(y) && collision.is_none() {
            let first = domain
                .iter()
                .zip(images)
                .find(|&(_, &img)| img == y)
                .map(|(&x1, _)| x1)
                .expect("an earlier preimage exists");
            collision = Some((first, x));
        }
    }
    let missed = domain.iter().copied().find(|&x| !hit.contains(x));
    let max_fiber_size = max_fiber_size(images.iter().copied().filter(|&y| in_domain.contains(y)));
    MapReport {
        is_bijection: collision.is_none() && missed.is_none() && escaped.is_none(),
        collision,
        missed,
        escaped,
        max_fiber_size,
    }
}

pub fn max_fiber_size<I: IntoIterator<Item = FieldElement>>(images: I) -> usize {
    let mut counts: HashMap<FieldElement, usize> = HashMap::new();
    for y in images {
        *counts.entry(y).or_default() += 1;
    }
    counts.into_values().max().unwrap_or(0)
}

/// The two conditions of the criterion for `x^r h(x^((3^(2k)-1)/d))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZieveConditions {
    /// `gcd(r, (3^(2k)-1)/d) = 1`.
    pub cond1: bool,
    /// `x^r h(x)^((3^(2k)-1)/d)` permutes `mu_d`; false if `h` vanishes on `mu_d`.
    pub cond2: bool,
}

impl ZieveConditions {
    pub fn holds(&self) -> bool {
        self.cond1 && self.cond2
    }
}

pub fn zieve_criterion(ctx: &FieldCtx, r: u64, d: u64, h: &Poly) -> Result<ZieveConditions> {
    let group = mu_enumerate(ctx, d)?;
    let s = ctx.group_order() / d;
    let cond1 = r.gcd(&s) == 1;
    let cond2 = if group.iter().any(|x| h.eval(ctx, x).is_zero()) {
        false
    } else {
        let map = |x: FieldElement| ctx.mul(ctx.pow(x, r), ctx.pow(h.eval(ctx, x), s));
        is_bijection_on(ctx, map, group.elements()).is_bijection
    };
    Ok(ZieveConditions { cond1, cond2 })
}

/// Direct check that `x^r h(x^((3^(2k)-1)/d))` permutes the whole field.
pub fn zieve_form_permutes(ctx: &FieldCtx, r: u64, d: u64, h: &Poly) -> Result<MapReport> {
    if !divides_group(ctx, d) {
        return Err(Error::NotSubgroupOrder {
            d,
            order: ctx.group_order(),
        });
    }
    let s = ctx.group_order() / d;
    let all: Vec<FieldElement> = ctx.elements().collect();
    let map = |x: FieldElement| ctx.mul(ctx.pow(x, r), h.eval(ctx, ctx.pow(x, s)));
    Ok(is_bijection_on(ctx, map, &all))
}
