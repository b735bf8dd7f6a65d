use std::collections::BTreeSet;

use itertools::Itertools;

use crate::algebra::{isomorphisms, kernel_congruence, ElementMap, FiniteSemigroup, LocalGroup};
use crate::construct::{GroupConstructionData, MonoidConstructionData};
use crate::pentagon::{
    is_cocommutative, is_commutative, is_idempotent, is_involutive, is_nondegenerate, transport_theta, ThetaTable,
};

use super::scope::NamedInstance;
use super::{Checker, Outcome, PropertyCase, Scope, Witness};

/// Returns a failure carrying the named bindings when the condition is false.
macro_rules! ensure {
    ($cond:expr, [$($var:ident),*], $($fmt:tt)+) => {
        if !$cond {
            return Outcome::Fail(Witness {
                bindings: vec![$((stringify!($var).to_string(), $var)),*],
                detail: format!($($fmt)+),
            });
        }
    };
}

struct Ctx<'a> {
    s: &'a FiniteSemigroup,
    t: &'a ThetaTable,
}

impl Ctx<'_> {
    fn m(&self, x: usize, y: usize) -> usize {
        self.s.mul(x, y)
    }

    fn th(&self, x: usize, y: usize) -> usize {
        self.t.get(x, y)
    }

    fn els(&self) -> std::ops::Range<usize> {
        self.s.elements()
    }

    fn idempotents(&self) -> Vec<usize> {
        self.s.idempotents().to_vec()
    }

    fn is_e(&self, x: usize) -> bool {
        self.s.is_idempotent(x)
    }

    /// `e ≤ f` on idempotents; false when either is not idempotent.
    fn leq(&self, e: usize, f: usize) -> bool {
        self.is_e(e) && self.is_e(f) && self.m(e, f) == e && self.m(f, e) == e
    }

    fn one(&self) -> usize {
        self.s.identity().expect("scope guarantees a monoid")
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> {
        let n = self.s.order();
        (0..n).cartesian_product(0..n).cartesian_product(0..n).map(|((x, y), z)| (x, y, z))
    }

    fn local_groups(&self) -> Vec<LocalGroup> {
        self.idempotents().into_iter().map(|e| self.s.local_group(e).expect("idempotent")).collect()
    }

    fn theta_one(&self) -> ElementMap {
        self.t.row(self.one())
    }

    /// `θ_1` is an idempotent monoid homomorphism into `E(M)`.
    fn theta_one_is_idempotent_hom(&self) -> bool {
        let t1 = self.theta_one();
        t1.is_idempotent() && t1.is_monoid_homomorphism(self.s, self.s) && self.els().all(|x| self.is_e(t1.apply(x)))
    }
}

fn ctx<'a>(s: &'a FiniteSemigroup, t: &'a ThetaTable) -> Ctx<'a> {
    Ctx { s, t }
}

fn need_idempotent(s: &FiniteSemigroup, t: &ThetaTable) -> Option<Outcome> {
    (!is_idempotent(s, t)).then(|| Outcome::Skip("solution is not idempotent".into()))
}

// Idempotents and the natural order.

fn leq_image_idempotent(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    for (e, f) in leq_pairs(&c) {
        let v = c.th(e, f);
        ensure!(c.is_e(v), [e, f], "θ_e(f) = {v} is not idempotent");
    }
    Outcome::Pass
}

fn leq_pairs(c: &Ctx) -> Vec<(usize, usize)> {
    let es = c.idempotents();
    es.iter().flat_map(|&e| es.iter().map(move |&f| (e, f))).filter(|&(e, f)| c.leq(e, f)).collect()
}

fn leq_images_ordered(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    for (e, f) in leq_pairs(&c) {
        let (a, b) = (c.th(e, e), c.th(e, f));
        ensure!(c.leq(a, b), [e, f], "θ_e(e) = {a} is not ≤ θ_e(f) = {b}");
    }
    Outcome::Pass
}

fn leq_factorisation(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    for (e, f) in leq_pairs(&c) {
        for z in c.els() {
            let (lhs, rhs) = (c.th(f, z), c.th(c.th(e, f), c.th(e, z)));
            ensure!(lhs == rhs, [e, f, z], "θ_f(z) = {lhs} but θ_(θ_e(f))(θ_e(z)) = {rhs}");
        }
    }
    Outcome::Pass
}

fn left_ideal_idempotent(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    for e in c.idempotents() {
        for x in c.els().filter(|&x| c.m(x, e) == x) {
            let v = c.th(x, e);
            ensure!(c.is_e(v), [e, x], "x ∈ Xe but θ_x(e) = {v} is not idempotent");
        }
    }
    Outcome::Pass
}

fn right_ideal_image(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    for e in c.idempotents() {
        for x in c.els().filter(|&x| c.m(e, x) == x) {
            let (g, v) = (c.th(e, e), c.th(e, x));
            ensure!(c.m(g, v) == v, [e, x], "θ_e(x) = {v} is not fixed by θ_e(e) = {g} on the left");
        }
    }
    Outcome::Pass
}

// Arbitrary solutions on monoids.

fn monoid_theta_at_one(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    let one = c.one();
    for x in c.els() {
        let v = c.th(x, one);
        ensure!(c.is_e(v), [x], "θ_x(1) = {v} is not idempotent");
    }
    Outcome::Pass
}

fn monoid_theta_one_factor(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    let one = c.one();
    for (x, z) in c.els().cartesian_product(c.els()) {
        let (lhs, rhs) = (c.th(one, z), c.th(c.th(x, one), c.th(x, z)));
        ensure!(lhs == rhs, [x, z], "θ_1(z) = {lhs} but θ_(θ_x(1))(θ_x(z)) = {rhs}");
    }
    Outcome::Pass
}

fn monoid_theta_one_image(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    let one = c.one();
    let g = c.th(one, one);
    for x in c.els() {
        let v = c.th(one, x);
        ensure!(c.m(g, v) == v, [x], "θ_1(x) = {v} is not in θ_1(1)M with θ_1(1) = {g}");
    }
    Outcome::Pass
}

fn monoid_theta_absorbs(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    let one = c.one();
    for (x, z) in c.els().cartesian_product(c.els()) {
        let (lhs, rhs) = (c.th(x, z), c.th(c.th(one, x), c.th(x, z)));
        ensure!(lhs == rhs, [x, z], "θ_x(z) = {lhs} but θ_(θ_1(x))(θ_x(z)) = {rhs}");
    }
    Outcome::Pass
}

// Central idempotents and local groups.

fn central_order(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    for h in c.local_groups() {
        let e = h.identity;
        for &x in &h.elements {
            let (a, b) = (c.th(e, e), c.th(x, e));
            ensure!(c.leq(a, b), [e, x], "θ_e(e) = {a} is not ≤ θ_x(e) = {b}");
        }
    }
    Outcome::Pass
}

/// The local group around `θ_e(e)` and the inverse of `θ_e(x)` in it.
fn image_inverse(c: &Ctx, e: usize, x: usize) -> Result<usize, String> {
    let g = c.th(e, e);
    if !c.is_e(g) {
        return Err(format!("θ_e(e) = {g} is not idempotent"));
    }
    let hg = c.s.local_group(g).expect("idempotent");
    let v = c.th(e, x);
    hg.inverse.get(&v).copied().ok_or_else(|| format!("θ_e(x) = {v} is not in the local group of {g}"))
}

fn central_local_group(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    for h in c.local_groups() {
        let e = h.identity;
        for (&x, &x_inv) in &h.inverse {
            let inv = match image_inverse(&c, e, x) {
                Ok(inv) => inv,
                Err(detail) => return Outcome::Fail(Witness { bindings: vec![("e".into(), e), ("x".into(), x)], detail }),
            };
            let w = c.th(x, x_inv);
            ensure!(inv == w, [e, x], "inverse of θ_e(x) is {inv} but θ_x(x⁻) = {w}");
        }
    }
    Outcome::Pass
}

fn central_quotient_formula(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    let groups = c.local_groups();
    for h in &groups {
        let e = h.identity;
        for &x in &h.elements {
            for hf in groups.iter().filter(|hf| c.leq(hf.identity, e)) {
                let f = hf.identity;
                for &y in &hf.elements {
                    let inv = match image_inverse(&c, e, x) {
                        Ok(inv) => inv,
                        Err(detail) => {
                            return Outcome::Fail(Witness { bindings: vec![("e".into(), e), ("x".into(), x)], detail })
                        }
                    };
                    let (lhs, rhs) = (c.th(x, y), c.m(inv, c.th(e, c.m(x, y))));
                    ensure!(lhs == rhs, [e, x, f, y], "θ_x(y) = {lhs} but θ_e(x)⁻·θ_e(xy) = {rhs}");
                }
            }
        }
    }
    Outcome::Pass
}

// Idempotent solutions on arbitrary semigroups.

fn idem_theta_of_theta(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    for (x, y, z) in c.triples() {
        let (lhs, rhs) = (c.th(c.th(x, y), z), c.th(y, z));
        ensure!(lhs == rhs, [x, y, z], "θ_(θ_x(y))(z) = {lhs} but θ_y(z) = {rhs}");
    }
    Outcome::Pass
}

fn idem_right_absorb(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    for (x, y, z) in c.triples() {
        let (lhs, rhs) = (c.th(y, z), c.th(y, c.th(c.m(x, y), z)));
        ensure!(lhs == rhs, [x, y, z], "θ_y(z) = {lhs} but θ_y(θ_xy(z)) = {rhs}");
    }
    Outcome::Pass
}

fn idem_product_fixed(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    for (x, y, z) in c.triples() {
        let v = c.th(x, c.m(y, z));
        let rhs = c.m(v, c.th(y, z));
        ensure!(v == rhs, [x, y, z], "θ_x(yz) = {v} but θ_x(yz)·θ_y(z) = {rhs}");
    }
    Outcome::Pass
}

fn idem_left_ideal(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    for e in c.idempotents() {
        for x in c.els().filter(|&x| c.m(x, e) == x) {
            let g = c.th(x, e);
            ensure!(c.m(x, g) == x, [e, x], "x is not in X·θ_x(e) with θ_x(e) = {g}");
            for y in c.els() {
                let v = c.th(y, x);
                ensure!(c.m(v, g) == v, [e, x, y], "θ_y(x) = {v} is not in X·θ_x(e) with θ_x(e) = {g}");
            }
            for z in c.els() {
                let (lhs, rhs) = (c.th(e, z), c.th(e, c.th(x, z)));
                ensure!(lhs == rhs, [e, x, z], "θ_e(z) = {lhs} but θ_e(θ_x(z)) = {rhs}");
            }
        }
    }
    Outcome::Pass
}

fn idem_right_ideal(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    for e in c.idempotents() {
        for x in c.els().filter(|&x| c.m(e, x) == x) {
            let g = c.th(e, x);
            ensure!(c.is_e(g), [e, x], "θ_e(x) = {g} is not idempotent");
            ensure!(c.m(x, g) == x, [e, x], "x is not in X·θ_e(x) with θ_e(x) = {g}");
            for y in c.els() {
                let v = c.th(y, x);
                ensure!(c.m(v, g) == v, [e, x, y], "θ_y(x) = {v} is not in X·θ_e(x) with θ_e(x) = {g}");
            }
            for z in c.els() {
                let (once, twice) = (c.th(x, z), c.th(x, c.th(x, z)));
                ensure!(once == twice, [e, x, z], "θ_x(z) = {once} but θ_x(θ_x(z)) = {twice}");
            }
        }
    }
    Outcome::Pass
}

fn idem_two_sided(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    for e in c.idempotents() {
        for x in c.els().filter(|&x| c.m(e, x) == x && c.m(x, e) == x) {
            let (g, h) = (c.th(e, x), c.th(x, e));
            ensure!(c.is_e(g), [e, x], "θ_e(x) = {g} is not idempotent");
            ensure!(c.m(x, g) == x && c.m(x, h) == x, [e, x], "x is not in X·{g} ∩ X·{h}");
            for y in c.els() {
                let v = c.th(y, x);
                ensure!(c.m(v, g) == v && c.m(v, h) == v, [e, x, y], "θ_y(x) = {v} is not in X·{g} ∩ X·{h}");
            }
            for z in c.els() {
                let (lhs, rhs) = (c.th(e, z), c.th(e, c.th(x, z)));
                ensure!(lhs == rhs, [e, x, z], "θ_e(z) = {lhs} but θ_e(θ_x(z)) = {rhs}");
                let (once, twice) = (c.th(x, z), c.th(x, c.th(x, z)));
                ensure!(once == twice, [e, x, z], "θ_x(z) = {once} but θ_x(θ_x(z)) = {twice}");
            }
        }
    }
    Outcome::Pass
}

// Idempotent solutions on monoids.

fn idem_monoid_basics(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    let one = c.one();
    let v = c.th(one, one);
    ensure!(v == one, [], "θ_1(1) = {v}");
    for x in c.els() {
        let (a, b) = (c.th(one, x), c.th(x, one));
        ensure!(c.leq(a, b), [x], "θ_1(x) = {a} is not ≤ θ_x(1) = {b}");
        for z in c.els() {
            let (lhs, rhs) = (c.th(x, z), c.th(a, z));
            ensure!(lhs == rhs, [x, z], "θ_x(z) = {lhs} but θ_(θ_1(x))(z) = {rhs}");
            let twice = c.th(x, lhs);
            ensure!(lhs == twice, [x, z], "θ_x(z) = {lhs} but θ_x(θ_x(z)) = {twice}");
        }
    }
    Outcome::Pass
}

fn idem_monoid_right_units(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    let one = c.one();
    for (r, r_inv) in c.els().cartesian_product(c.els()).filter(|&(r, ri)| c.m(r, ri) == one) {
        let v = c.th(r, r_inv);
        ensure!(v == one, [r, r_inv], "θ_r(r') = {v}");
        let w = c.th(one, r);
        ensure!(w == one, [r], "θ_1(r) = {w}");
        for z in c.els() {
            let (lhs, rhs) = (c.th(one, z), c.th(r, z));
            ensure!(lhs == rhs, [r, z], "θ_1(z) = {lhs} but θ_r(z) = {rhs}");
        }
    }
    Outcome::Pass
}

fn idem_theta_one_hom(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    let one = c.one();
    let t1 = |x| c.th(one, x);
    ensure!(t1(one) == one, [], "θ_1(1) = {}", t1(one));
    for x in c.els() {
        ensure!(c.is_e(t1(x)), [x], "θ_1(x) = {} is not idempotent", t1(x));
        ensure!(t1(t1(x)) == t1(x), [x], "θ_1(θ_1(x)) = {} ≠ θ_1(x) = {}", t1(t1(x)), t1(x));
        for y in c.els() {
            let (lhs, rhs) = (t1(c.m(x, y)), c.m(t1(x), t1(y)));
            ensure!(lhs == rhs, [x, y], "θ_1(xy) = {lhs} but θ_1(x)θ_1(y) = {rhs}");
        }
    }
    Outcome::Pass
}

fn i2_suffices(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    let one = c.one();
    if !c.theta_one_is_idempotent_hom() || c.els().any(|x| c.m(x, c.th(one, x)) != x) {
        return Outcome::Skip("θ_1 is not an idempotent monoid homomorphism into E(M) with x·θ_1(x) = x".into());
    }
    let i2 = c.els().cartesian_product(c.els()).all(|(x, y)| c.th(c.m(x, y), c.th(x, y)) == c.th(x, y));
    let idem = is_idempotent(s, t);
    ensure!(idem == i2, [], "idempotent = {idem} but (I2) = {i2}");
    Outcome::Pass
}

fn kernel_conclusion(c: &Ctx) -> Outcome {
    let one = c.one();
    let t1 = c.theta_one();
    let image = t1.image();
    ensure!(image.contains(&one), [], "the image of θ_1 misses the identity");
    let ker = match kernel_congruence(c.s, &t1) {
        Ok(ker) => ker,
        Err(err) => return Outcome::Fail(Witness { bindings: vec![], detail: format!("ker θ_1: {err}") }),
    };
    ensure!(ker.is_system_of_representatives(&image), [], "θ_1(M) = {image:?} is not a system of representatives");
    for (x, y) in c.els().cartesian_product(c.els()) {
        let v = c.th(x, y);
        ensure!(ker.related(v, y), [x, y], "θ_x(y) = {v} and y are not related by ker θ_1");
    }
    Outcome::Pass
}

fn kernel_representatives(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    if !c.theta_one().is_monoid_homomorphism(s, s) || c.els().any(|x| !c.is_e(c.th(c.one(), x))) {
        return Outcome::Skip("θ_1 is not a monoid homomorphism into E(M)".into());
    }
    kernel_conclusion(&c)
}

fn kernel_corollary(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    kernel_conclusion(&ctx(s, t))
}

fn monoid_theorem_converse(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if let Some(skip) = need_idempotent(s, t) {
        return skip;
    }
    let c = ctx(s, t);
    let mu = c.theta_one();
    let thetas = mu.image().into_iter().map(|e| (e, t.row(e))).collect();
    if let Err(err) = MonoidConstructionData::new(s.clone(), mu.clone(), thetas) {
        return Outcome::Fail(Witness { bindings: vec![], detail: err.to_string() });
    }
    for (x, y) in c.els().cartesian_product(c.els()) {
        let (lhs, rhs) = (c.th(x, y), c.th(mu.apply(x), y));
        ensure!(lhs == rhs, [x, y], "θ_x(y) = {lhs} but θ_(μ(x))(y) = {rhs}");
    }
    Outcome::Pass
}

fn group_theorem_converse(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    let one = c.one();
    let t1 = c.theta_one();
    let k: Vec<usize> = c.els().filter(|&x| t1.apply(x) == one).collect();
    if let Err(err) = GroupConstructionData::new(s.clone(), &k, &t1.image(), t1.clone()) {
        return Outcome::Fail(Witness { bindings: vec![], detail: err.to_string() });
    }
    for (x, y) in c.els().cartesian_product(c.els()) {
        let inv = s.inverse(t1.apply(x)).expect("group element");
        let (lhs, rhs) = (c.th(x, y), c.m(inv, t1.apply(c.m(x, y))));
        ensure!(lhs == rhs, [x, y], "θ_x(y) = {lhs} but θ_1(x)⁻¹θ_1(xy) = {rhs}");
    }
    Outcome::Pass
}

fn involutive_both(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    if !is_involutive(s, t) {
        return Outcome::Skip("solution is not involutive".into());
    }
    let (cm, cc) = (is_commutative(s, t), is_cocommutative(s, t));
    ensure!(cm && cc, [], "involutive with commutative = {cm}, cocommutative = {cc}");
    Outcome::Pass
}

fn is_idempotent_endomorphism(s: &FiniteSemigroup, gamma: &[usize]) -> bool {
    s.elements().all(|x| gamma[gamma[x]] == gamma[x])
        && s.elements().cartesian_product(s.elements()).all(|(x, y)| gamma[s.mul(x, y)] == s.mul(gamma[x], gamma[y]))
}

fn constant_rows(t: &ThetaTable) -> Option<Vec<usize>> {
    let rows = t.rows();
    rows.iter().all(|r| *r == rows[0]).then(|| rows[0].clone())
}

fn commutative_monoid(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let lhs = is_commutative(s, t);
    let gamma = constant_rows(t);
    let rhs = s.is_commutative() && gamma.as_ref().is_some_and(|g| is_idempotent_endomorphism(s, g));
    ensure!(
        lhs == rhs,
        [],
        "commutative = {lhs} but (M commutative, θ_x = γ idempotent endomorphism) = {rhs}"
    );
    Outcome::Pass
}

fn units_preserved(s: &FiniteSemigroup, t: &ThetaTable) -> Outcome {
    let c = ctx(s, t);
    let one = c.one();
    let units: Vec<usize> = c.els().filter(|&u| c.els().any(|v| c.m(u, v) == one && c.m(v, u) == one)).collect();
    for x in c.els() {
        for &u in &units {
            let v = c.th(x, u);
            ensure!(units.contains(&v), [x, u], "θ_x(u) = {v} is not a unit");
        }
    }
    Outcome::Pass
}

// Semigroup-level statements, given the full solution list.

/// Every map `0..n → 0..n`, as tables.
fn all_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).map(|_| 0..n).multi_cartesian_product().chain((n == 0).then(Vec::new))
}

const MAP_SCAN_CAP: usize = 6;

fn gamma_solutions(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let n = s.order();
    if n > MAP_SCAN_CAP {
        return Outcome::Skip(format!("map scan limited to order {MAP_SCAN_CAP}"));
    }
    let found: BTreeSet<Vec<usize>> = sols.iter().filter_map(constant_rows).collect();
    let expected: BTreeSet<Vec<usize>> = all_maps(n).filter(|g| is_idempotent_endomorphism(s, g)).collect();
    if let Some(g) = expected.symmetric_difference(&found).next() {
        let listed = usize::from(found.contains(g));
        return Outcome::Fail(Witness {
            bindings: vec![("listed".into(), listed)],
            detail: format!("γ = {g:?}: solution listed = {}, idempotent endomorphism = {}", listed == 1, listed == 0),
        });
    }
    for t in sols.iter().filter(|t| constant_rows(t).is_some()) {
        let identity = t.row(0).table() == (0..n).collect::<Vec<_>>().as_slice();
        ensure!(is_nondegenerate(t) == identity, [], "γ = {:?}: non-degenerate disagrees with γ = id", t.row(0).table());
    }
    Outcome::Pass
}

fn gamma_idempotent(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let n = s.order();
    if n > MAP_SCAN_CAP {
        return Outcome::Skip(format!("map scan limited to order {MAP_SCAN_CAP}"));
    }
    let found: BTreeSet<Vec<usize>> =
        sols.iter().filter(|t| is_idempotent(s, t)).filter_map(constant_rows).collect();
    let expected: BTreeSet<Vec<usize>> = all_maps(n)
        .filter(|g| is_idempotent_endomorphism(s, g) && s.elements().all(|x| s.mul(x, g[x]) == x))
        .collect();
    match expected.symmetric_difference(&found).next() {
        Some(g) => Outcome::Fail(Witness {
            bindings: vec![],
            detail: format!("γ = {g:?}: idempotent solution listed = {}", found.contains(g)),
        }),
        None => Outcome::Pass,
    }
}

fn exactly(sols: &[ThetaTable], keep: impl Fn(&ThetaTable) -> bool, expected: ThetaTable, what: &str) -> Outcome {
    let kept: Vec<&ThetaTable> = sols.iter().filter(|t| keep(t)).collect();
    let count = kept.len();
    ensure!(count == 1, [count], "expected exactly one {what} solution");
    ensure!(*kept[0] == expected, [], "the {what} solution is {:?}, expected {:?}", kept[0].rows(), expected.rows());
    Outcome::Pass
}

fn identity_theta(n: usize) -> ThetaTable {
    ThetaTable::from_fn(n, |_, y| y)
}

fn unique_cocommutative(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    exactly(sols, |t| is_cocommutative(s, t), identity_theta(s.order()), "cocommutative")
}

fn unique_nondegenerate(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    exactly(sols, is_nondegenerate, identity_theta(s.order()), "non-degenerate")
}

fn unique_idempotent_constant_one(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let one = s.identity().expect("scope guarantees a monoid");
    exactly(sols, |t| is_idempotent(s, t), ThetaTable::constant(s.order(), one), "idempotent")
}

fn b_squared_a_remark(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let verdict = unique_idempotent_constant_one(s, sols);
    if verdict != Outcome::Pass {
        return verdict;
    }
    let one = s.identity().expect("monoid");
    let es = s.idempotents().to_vec();
    let image: BTreeSet<usize> = es.iter().map(|&e| sols.iter().find(|t| is_idempotent(s, t)).unwrap().get(one, e)).collect();
    ensure!(image != es.iter().copied().collect(), [], "θ_1(E(M)) = E(M)");
    Outcome::Pass
}

fn constant_solutions(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    for &e in s.idempotents() {
        let t = ThetaTable::constant(s.order(), e);
        ensure!(sols.contains(&t), [e], "(xy, e) is missing from the solutions");
        let absorbs = s.elements().cartesian_product(s.elements()).all(|(x, y)| s.mul(s.mul(x, y), e) == s.mul(x, y));
        let idem = is_idempotent(s, &t);
        ensure!(idem == absorbs, [e], "idempotent = {idem} but xy·e = xy throughout = {absorbs}");
    }
    Outcome::Pass
}

fn group_iso_criterion(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let one = s.identity().expect("group");
    let autos = crate::algebra::automorphisms(s);
    for ((i, a), (j, b)) in sols.iter().enumerate().cartesian_product(sols.iter().enumerate()) {
        for f in &autos {
            let iso = transport_theta(a, f) == *b;
            let criterion = s.elements().all(|x| f.apply(a.get(one, x)) == b.get(one, f.apply(x)));
            ensure!(iso == criterion, [i, j], "f = {:?}: isomorphism = {iso} but fθ_1 = η_1f is {criterion}", f.table());
        }
    }
    Outcome::Pass
}

fn monoid_iso_remark(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let one = s.identity().expect("monoid");
    let autos = crate::algebra::automorphisms(s);
    let idem: Vec<&ThetaTable> = sols.iter().filter(|t| is_idempotent(s, t)).collect();
    for ((i, a), (j, b)) in idem.iter().enumerate().cartesian_product(idem.iter().enumerate()) {
        for f in autos.iter().filter(|f| transport_theta(a, f) == **b) {
            let ok = s.elements().all(|x| f.apply(a.get(one, x)) == b.get(one, f.apply(x)));
            ensure!(ok, [i, j], "f = {:?} is an isomorphism but fθ_1 ≠ η_1f", f.table());
        }
    }
    Outcome::Pass
}

/// The solutions carried onto the named labelling of the instance.
fn in_named_labels(s: &FiniteSemigroup, sols: &[ThetaTable], which: NamedInstance) -> (FiniteSemigroup, Vec<ThetaTable>) {
    let target = which.semigroup();
    let f = isomorphisms(s, &target).into_iter().next().expect("scope guarantees an isomorphism");
    let mut moved: Vec<ThetaTable> = sols.iter().map(|t| transport_theta(t, &f)).collect();
    moved.sort();
    (target, moved)
}

fn table(rows: [[usize; 3]; 3]) -> ThetaTable {
    ThetaTable::new(rows.iter().map(|r| r.to_vec()).collect()).expect("3×3 table")
}

fn worked_example(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let (m, moved) = in_named_labels(s, sols, NamedInstance::UnitB);
    let idem: Vec<ThetaTable> = moved.into_iter().filter(|t| is_idempotent(&m, t)).collect();
    let classes = crate::search::canonical_forms(&m, &idem);
    let expected = vec![
        table([[0, 0, 0], [0, 0, 0], [0, 0, 0]]),
        table([[0, 1, 0], [0, 1, 0], [0, 1, 0]]),
        table([[0, 1, 0], [0, 1, 2], [0, 1, 0]]),
    ];
    let count = classes.len();
    ensure!(classes == expected, [count], "idempotent classes {:?}", classes.iter().map(|t| t.flat().to_vec()).collect::<Vec<_>>());
    Outcome::Pass
}

fn chain_example(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let (m, moved) = in_named_labels(s, sols, NamedInstance::Chain);
    let idem: Vec<&ThetaTable> = moved.iter().filter(|t| is_idempotent(&m, t)).collect();
    let listed = table([[0, 0, 2], [0, 0, 2], [1, 1, 2]]);
    ensure!(idem.contains(&&listed), [], "the solution with θ_b(1) = a is missing");
    let sharing = idem.iter().filter(|t| t.row(0).table() == [0, 0, 2]).count();
    ensure!(sharing == 3, [sharing], "solutions sharing θ_1 = (1, 1, b)");
    Outcome::Pass
}

fn null_swap_example(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let (m, moved) = in_named_labels(s, sols, NamedInstance::Null3);
    let swap = table([[0, 1, 2], [0, 2, 1], [0, 2, 1]]);
    ensure!(moved.contains(&swap), [], "the swap solution is missing");
    ensure!(is_idempotent(&m, &swap) && is_nondegenerate(&swap), [], "the swap solution is not idempotent and non-degenerate");
    Outcome::Pass
}

fn commuting_idempotent_maps(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let n = s.order();
    if n > MAP_SCAN_CAP {
        return Outcome::Skip(format!("map scan limited to order {MAP_SCAN_CAP}"));
    }
    let f: Vec<usize> = s.elements().map(|x| s.mul(x, x)).collect();
    for g in all_maps(n).filter(|g| (0..n).all(|x| g[g[x]] == g[x] && f[g[x]] == g[f[x]])) {
        let t = ThetaTable::from_fn(n, |_, y| g[y]);
        ensure!(sols.contains(&t), [], "γ = {g:?} commutes with the row map but is not listed");
        ensure!(is_commutative(s, &t) && is_cocommutative(s, &t), [], "γ = {g:?} is not commutative and cocommutative");
    }
    Outcome::Pass
}

fn variety_solution(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let t = ThetaTable::from_fn(s.order(), |x, y| s.mul(x, y));
    ensure!(sols.contains(&t), [], "(xy, xy) is not listed");
    ensure!(is_idempotent(s, &t), [], "(xy, xy) is not idempotent");
    Outcome::Pass
}

fn clifford_inverse_solution(s: &FiniteSemigroup, sols: &[ThetaTable]) -> Outcome {
    let inv = s.clifford_inverses().expect("scope guarantees Clifford");
    let t = ThetaTable::from_fn(s.order(), |_, y| s.mul(inv[y], y));
    ensure!(sols.contains(&t), [], "(xy, y⁻¹y) is not listed");
    ensure!(is_idempotent(s, &t), [], "(xy, y⁻¹y) is not idempotent");
    Outcome::Pass
}

fn case(id: &'static str, scope: Scope, quote: &'static str, statement: &'static str, checker: Checker) -> PropertyCase {
    PropertyCase { id, scope, quote, statement, interpretation: None, checker }
}

/// All cases, in a fixed order.
pub fn catalog() -> Vec<PropertyCase> {
    use Checker::{Semigroup as Set, Solution as Sol};
    use Scope::*;
    vec![
        case("order.image-idempotent", Semigroup, r"\theta_e(f) \in \E(X)", "e ≤ f in E ⇒ θ_e(f) ∈ E", Sol(leq_image_idempotent)),
        case("order.images-ordered", Semigroup, r"\theta_e(e) \leq \theta_e(f)", "e ≤ f ⇒ θ_e(e) ≤ θ_e(f)", Sol(leq_images_ordered)),
        case("order.factorisation", Semigroup, r"\theta_f=\theta_{\theta_e(f)}\theta_e", "e ≤ f ⇒ θ_f = θ_(θ_e(f))∘θ_e", Sol(leq_factorisation)),
        case("ideal.left-idempotent", Semigroup, r"If $x \in Xe$, then $\theta_x(e) \in \E(X)$", "e ∈ E, xe = x ⇒ θ_x(e) ∈ E", Sol(left_ideal_idempotent)),
        case("ideal.right-image", Semigroup, r"$\theta_e(x) \in \theta_e(e)X$", "e ∈ E, ex = x ⇒ θ_e(e)·θ_e(x) = θ_e(x)", Sol(right_ideal_image)),
        case("monoid.theta-at-one", Monoid, r"$\theta_x(1) \in \E(M)$", "θ_x(1) ∈ E for all x", Sol(monoid_theta_at_one)),
        case("monoid.theta-one-factor", Monoid, r"$\theta_1=\theta_{\theta_x(1)}\theta_x$", "θ_1 = θ_(θ_x(1))∘θ_x for all x", Sol(monoid_theta_one_factor)),
        case("monoid.theta-one-image", Monoid, r"$\theta_1(x) \in \theta_1(1)M$", "θ_1(1)·θ_1(x) = θ_1(x) for all x", Sol(monoid_theta_one_image)),
        case("monoid.theta-absorbs", Monoid, r"$\theta_x=\theta_{\theta_1(x)}\theta_x$", "θ_x = θ_(θ_1(x))∘θ_x for all x", Sol(monoid_theta_absorbs)),
        case("central.order", CentralIdempotentSemigroup, r"$\theta_e(e) \leq \theta_x(e)$", "e ∈ E, x ∈ H_e ⇒ θ_e(e) ≤ θ_x(e)", Sol(central_order)),
        case("central.local-group", CentralIdempotentSemigroup, r"$\theta_e(x) \in H_{\theta_e(e)}$", "x ∈ H_e ⇒ θ_e(x) ∈ H_(θ_e(e)) with inverse θ_x(x⁻)", Sol(central_local_group)),
        case("central.quotient-formula", CentralIdempotentSemigroup, r"\theta_x(y)=\theta_e\left(x\right)^{-}\theta_e(xy)", "x ∈ H_e, f ≤ e, y ∈ H_f ⇒ θ_x(y) = θ_e(x)⁻·θ_e(xy)", Sol(central_quotient_formula)),
        case("idempotent.theta-of-theta", Semigroup, r"$\theta_{\theta_x(y)}=\theta_y,$", "idempotent ⇒ θ_(θ_x(y)) = θ_y", Sol(idem_theta_of_theta)),
        case("idempotent.right-absorb", Semigroup, r"$\theta_y=\theta_y\theta_{xy},$", "idempotent ⇒ θ_y = θ_y∘θ_xy", Sol(idem_right_absorb)),
        case("idempotent.product-fixed", Semigroup, r"$\theta_x(yz)=\theta_x(yz)\theta_y(z)$", "idempotent ⇒ θ_x(yz) = θ_x(yz)·θ_y(z)", Sol(idem_product_fixed)),
        case("idempotent.left-ideal", Semigroup, r"$\forall y \in X \quad \theta_y(x) \in X\theta_x(e) $", "idempotent, xe = x ⇒ x, θ_y(x) ∈ X·θ_x(e) and θ_e = θ_e∘θ_x", Sol(idem_left_ideal)),
        case("idempotent.right-ideal", Semigroup, r"$\theta_x$ is an idempotent map", "idempotent, ex = x ⇒ θ_e(x) ∈ E, x, θ_y(x) ∈ X·θ_e(x), θ_x idempotent", Sol(idem_right_ideal)),
        case("idempotent.two-sided", Semigroup, r"$x \in X\theta_e(x) \cap X\theta_x(e)$", "idempotent, x ∈ eXe ⇒ the five two-sided consequences", Sol(idem_two_sided)),
        case("idempotent-monoid.basics", Monoid, r"$\theta_1(x) \leq \theta_x(1)$", "idempotent ⇒ θ_1(1) = 1, θ_x = θ_(θ_1(x)), θ_1(x) ≤ θ_x(1), θ_x idempotent", Sol(idem_monoid_basics)),
        case("idempotent-monoid.right-units", Monoid, r"If $r\in M$ is a right unit of $M$", "idempotent, rr' = 1 ⇒ θ_r(r') = 1, θ_1(r) = 1, θ_1 = θ_r", Sol(idem_monoid_right_units)),
        case("idempotent-monoid.theta-one-hom", CentralIdempotentMonoid, r"idempotent monoid homomorphism from $M$ to $\E(M)$", "idempotent ⇒ θ_1 is an idempotent monoid homomorphism into E(M)", Sol(idem_theta_one_hom)),
        case("idempotent-monoid.i2-suffices", CentralIdempotentMonoid, r"$s$ is idempotent if and only if \eqref{i_two} is satisfied", "θ_1 idempotent homomorphism into E with xθ_1(x) = x ⇒ (idempotent ⟺ I2)", Sol(i2_suffices)),
        case("idempotent-monoid.kernel", Monoid, r"system of representatives of $M/\ker \theta_1$", "idempotent, θ_1 homomorphism into E ⇒ θ_1(M) represents ker θ_1 with 1, (θ_x(y), y) ∈ ker θ_1", Sol(kernel_representatives)),
        case("idempotent-monoid.kernel-central", CentralIdempotentMonoid, r"Then, $\theta_1(M)$ is a system of representatives", "idempotent ⇒ θ_1(M) represents ker θ_1 with 1, (θ_x(y), y) ∈ ker θ_1", Sol(kernel_corollary)),
        case("idempotent-monoid.construction-converse", CentralIdempotentMonoid, r"Conversely, every idempotent solution on $M$ can be so constructed", "idempotent ⇒ (θ_1, {θ_e}) satisfies the construction hypotheses and θ_x = θ_(θ_1(x))", Sol(monoid_theorem_converse)),
        case("group.construction-converse", Group, r"Conversely, if $s$ is a solution on $G$", "K = ker θ_1 normal, R = im θ_1 representatives with 1, θ_x(y) = θ_1(x)⁻¹θ_1(xy)", Sol(group_theorem_converse)),
        case("involutive.commutative-cocommutative", Semigroup, r"if $s$ is an involutive solution, then $s$ is both commutative and cocommutative", "involutive ⇒ commutative and cocommutative", Sol(involutive_both)),
        case("monoid.commutative-solutions", Monoid, r"$M$ is a commutative monoid and $\theta_x=\gamma$", "commutative ⟺ M commutative and θ_x = γ, γ an idempotent endomorphism", Sol(commutative_monoid)),
        case("gamma.solutions", Semigroup, r"is a solution if and only if $\gamma\in \End(X)$ and $\gamma^2=\gamma$", "row-constant solutions are exactly the idempotent endomorphisms; non-degenerate ⟺ γ = id", Set(gamma_solutions)),
        case("gamma.idempotent-on-monoid", Monoid, r"and $x\gamma(x)=x$, for every $x \in M$", "(xy, γ(y)) idempotent ⟺ γ idempotent endomorphism with xγ(x) = x", Set(gamma_idempotent)),
        PropertyCase {
            interpretation: Some("the solution part holds for every idempotent e; idempotency holds exactly when xy·e = xy for all x, y"),
            ..case("gamma.constant", Semigroup, r"$ s(x,y)=\left(xy,e\right),$", "(xy, e) is a solution for e ∈ E, idempotent ⟺ xy·e = xy", Set(constant_solutions))
        },
        case("monoid.unique-cocommutative", Monoid, r"the unique cocommutative solution on $M$", "exactly one cocommutative solution: θ_x = id", Set(unique_cocommutative)),
        case("monoid.unique-nondegenerate", Monoid, r"the only non-degenerate solution on a monoid", "exactly one non-degenerate solution: θ_x = id", Set(unique_nondegenerate)),
        case("group.unique-idempotent", Group, r"the unique idempotent solution on $X$ is the map $s(x,y)=(xy, 1)$", "exactly one idempotent solution: θ_x(y) = 1", Set(unique_idempotent_constant_one)),
        case("cancellative.unique-idempotent", CancellativeMonoid, r"is the unique idempotent solution on $M$", "exactly one idempotent solution: θ_x(y) = 1", Set(unique_idempotent_constant_one)),
        PropertyCase {
            interpretation: Some("b² is not fixed by the statement; b² = a is used, since b² = 1 admits three idempotent solutions"),
            ..case("monoid.theta-one-not-onto-idempotents", IsoTo(NamedInstance::BSquaredA), r"the only idempotent solution is $s(x,y)=(xy, 1).$", "exactly one idempotent solution θ_x(y) = 1, and θ_1(E(M)) ≠ E(M)", Set(b_squared_a_remark))
        },
        case("group.iso-criterion", Group, r"isomorphic via $f \in \Aut(G)$ if and only if  $f\theta_1=\eta_1f$", "f ∈ Aut(G) carries θ to η ⟺ fθ_1 = η_1f", Set(group_iso_criterion)),
        case("idempotent-monoid.iso-criterion", CentralIdempotentMonoid, r"there exists an isomorphism $f$ of $M$ such that $f\theta_1=\eta_1 f$", "f carries idempotent θ to η ⇒ fθ_1 = η_1f", Set(monoid_iso_remark)),
        case("example.unit-b", IsoTo(NamedInstance::UnitB), r"there are three idempotent solutions up to isomorphism", "three idempotent classes: constant 1, γ = (1, a, 1), and the listed t", Set(worked_example)),
        case("example.chain", IsoTo(NamedInstance::Chain), r"there exists an idempotent solution on $M$ for which $\theta_b(1)=a.$", "the listed solution with θ_b(1) = a exists; three idempotent solutions share its θ_1", Set(chain_example)),
        case("example.null-swap", IsoTo(NamedInstance::Null3), r"is an idempotent and non-degenerate solution on $S$", "θ_0 = id, θ_a = θ_b = (a b) is an idempotent non-degenerate solution", Set(null_swap_example)),
        case("example.commuting-idempotent-maps", RowConstant, r"Set $x \cdot y=f(x)$, for all $x, y \in X$", "x·y = f(x), g idempotent commuting with f ⇒ (x·y, g(y)) is a commutative and cocommutative solution", Set(commuting_idempotent_maps)),
        case("example.variety", VarietyS, r"$s\left(x,y\right)= \left(xy, xy\right),$", "abc = bc ⇒ (xy, xy) is an idempotent solution", Set(variety_solution)),
        case("example.clifford", Clifford, r"Every Clifford semigroup $X$ gives rise to the idempotent solution", "Clifford ⇒ (xy, y⁻¹y) is an idempotent solution", Set(clifford_inverse_solution)),
    ]
}

/// Statements recorded per instance without asserting them.
pub fn observations() -> Vec<PropertyCase> {
    vec![case(
        "monoid.units-preserved",
        Scope::Monoid,
        r"In general, it is not true that $\theta_x\left(M^\times\right) \subseteq M^\times$",
        "θ_x maps units to units",
        Checker::Solution(units_preserved),
    )]
}
