//! Backtracking over θ-tables with bitmask domains.
//!
//! Cells are decided in row-major order, smallest value first, so leaves come
//! out in lexicographic order of the flattened table. After every decision the
//! (P1)/(P2) instances and the active filters are swept to a fixpoint:
//!
//! * (P1) with two of `θ_x(y)`, `θ_{xy}(z)`, `θ_x(yz)` fixed narrows the third,
//!   using precomputed left/right division masks of the Cayley table.
//! * (P2) with `θ_x(y) = a` and `θ_{xy}(z) = b` fixed forces the cells `(a, b)`
//!   and `(y, z)` to share a value.

use crate::algebra::FiniteSemigroup;
use crate::pentagon::{satisfies_pentagon, Property, ThetaTable};

pub(crate) type Mask = u32;

#[inline]
fn bit(v: usize) -> Mask {
    1 << v
}

#[inline]
fn single(m: Mask) -> Option<usize> {
    (m.count_ones() == 1).then(|| m.trailing_zeros() as usize)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub(crate) struct Filters {
    pub idempotent: bool,
    pub involutive: bool,
    pub nondegenerate: bool,
    pub commutative: bool,
    pub cocommutative: bool,
}

impl Filters {
    pub fn from_properties(props: &[Property]) -> Self {
        let mut f = Filters::default();
        for p in props {
            match p {
                Property::Idempotent => f.idempotent = true,
                Property::Involutive => f.involutive = true,
                Property::Nondegenerate => f.nondegenerate = true,
                Property::Commutative => f.commutative = true,
                Property::Cocommutative => f.cocommutative = true,
            }
        }
        f
    }

    fn accepts(&self, s: &FiniteSemigroup, theta: &ThetaTable) -> bool {
        use crate::pentagon::{is_cocommutative, is_commutative, is_idempotent, is_involutive, is_nondegenerate};
        (!self.idempotent || is_idempotent(s, theta))
            && (!self.involutive || is_involutive(s, theta))
            && (!self.nondegenerate || is_nondegenerate(theta))
            && (!self.commutative || is_commutative(s, theta))
            && (!self.cocommutative || is_cocommutative(s, theta))
    }
}

/// Search state: one domain per cell plus an undo trail.
#[derive(Clone)]
pub(crate) struct Domains {
    dom: Vec<Mask>,
    trail: Vec<(u16, Mask)>,
}

impl Domains {
    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (cell, old) = self.trail.pop().expect("trail above mark");
            self.dom[cell as usize] = old;
        }
    }

    /// Intersects a domain; `Err` on wipe-out, `Ok(true)` when it shrank.
    #[inline]
    fn restrict(&mut self, cell: usize, mask: Mask) -> Result<bool, ()> {
        let old = self.dom[cell];
        let new = old & mask;
        if new == 0 {
            return Err(());
        }
        if new != old {
            self.trail.push((cell as u16, old));
            self.dom[cell] = new;
            return Ok(true);
        }
        Ok(false)
    }
}

pub(crate) struct Engine<'a> {
    s: &'a FiniteSemigroup,
    n: usize,
    filters: Filters,
    /// `left_div[a * n + c]`: all `t` with `a·t = c`.
    left_div: Vec<Mask>,
    /// `right_div[b * n + c]`: all `t` with `t·b = c`.
    right_div: Vec<Mask>,
}

impl<'a> Engine<'a> {
    pub fn new(s: &'a FiniteSemigroup, filters: Filters) -> Self {
        let n = s.order();
        let mut left_div = vec![0; n * n];
        let mut right_div = vec![0; n * n];
        for a in 0..n {
            for t in 0..n {
                left_div[a * n + s.mul(a, t)] |= bit(t);
                right_div[a * n + s.mul(t, a)] |= bit(t);
            }
        }
        Engine { s, n, filters, left_div, right_div }
    }

    /// Domains before any decision, with the per-cell parts of the filters applied.
    /// `None` when a filter rules out every table up front.
    pub fn initial(&self) -> Option<Domains> {
        let (s, n) = (self.s, self.n);
        let full: Mask = if n == 32 { Mask::MAX } else { (1 << n) - 1 };
        if self.filters.commutative && !c1_holds(s) {
            return None;
        }
        let mut dom = vec![full; n * n];
        for x in 0..n {
            for y in 0..n {
                let xy = s.mul(x, y);
                let cell = &mut dom[x * n + y];
                for v in 0..n {
                    let ok = (!self.filters.idempotent || s.mul(xy, v) == xy)
                        && (!self.filters.involutive || s.mul(xy, v) == x)
                        && (!self.filters.cocommutative || (0..n).all(|w| s.mul(w, v) == s.mul(w, y)));
                    if !ok {
                        *cell &= !bit(v);
                    }
                }
                if *cell == 0 {
                    return None;
                }
            }
        }
        Some(Domains { dom, trail: Vec::new() })
    }

    /// Sweeps all constraints until nothing changes. `false` on contradiction.
    pub fn propagate(&self, d: &mut Domains) -> bool {
        loop {
            match self.sweep(d) {
                Err(()) => return false,
                Ok(false) => return true,
                Ok(true) => {}
            }
        }
    }

    fn sweep(&self, d: &mut Domains) -> Result<bool, ()> {
        let (s, n) = (self.s, self.n);
        let mut changed = false;
        for x in 0..n {
            for y in 0..n {
                let xy = s.mul(x, y);
                let a = x * n + y;
                for z in 0..n {
                    let b = xy * n + z;
                    let c = x * n + s.mul(y, z);
                    let (sa, sb, sc) = (single(d.dom[a]), single(d.dom[b]), single(d.dom[c]));
                    match (sa, sb, sc) {
                        (Some(va), Some(vb), _) => {
                            changed |= d.restrict(c, bit(s.mul(va, vb)))?;
                            // (P2): θ_{va}(vb) = θ_y(z)
                            let (e, f) = (va * n + vb, y * n + z);
                            let meet = d.dom[e] & d.dom[f];
                            changed |= d.restrict(e, meet)?;
                            changed |= d.restrict(f, meet)?;
                        }
                        (Some(va), None, Some(vc)) => changed |= d.restrict(b, self.left_div[va * n + vc])?,
                        (None, Some(vb), Some(vc)) => changed |= d.restrict(a, self.right_div[vb * n + vc])?,
                        _ => {}
                    }
                }
                if let Some(va) = single(d.dom[a]) {
                    let forced = xy * n + va;
                    if self.filters.idempotent {
                        changed |= d.restrict(forced, bit(va))?;
                    }
                    if self.filters.involutive {
                        changed |= d.restrict(forced, bit(y))?;
                    }
                    if self.filters.nondegenerate {
                        for other in (0..n).filter(|&o| o != y) {
                            changed |= d.restrict(x * n + other, !bit(va))?;
                        }
                    }
                }
            }
        }
        if self.filters.commutative {
            // (C2): θ_x(z) = θ_{xy}(z)
            for x in 0..n {
                for y in 0..n {
                    let xy = s.mul(x, y);
                    for z in 0..n {
                        let (p, q) = (x * n + z, xy * n + z);
                        let meet = d.dom[p] & d.dom[q];
                        changed |= d.restrict(p, meet)?;
                        changed |= d.restrict(q, meet)?;
                    }
                }
            }
        }
        if self.filters.cocommutative {
            // (CC2): θ_x(θ_y(z)) = θ_y(θ_x(z))
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if let (Some(a), Some(c)) = (single(d.dom[y * n + z]), single(d.dom[x * n + z])) {
                            let (p, q) = (x * n + a, y * n + c);
                            let meet = d.dom[p] & d.dom[q];
                            changed |= d.restrict(p, meet)?;
                            changed |= d.restrict(q, meet)?;
                        }
                    }
                }
            }
        }
        Ok(changed)
    }

    fn first_open(&self, d: &Domains) -> Option<usize> {
        d.dom.iter().position(|m| m.count_ones() > 1)
    }

    fn leaf(&self, d: &Domains) -> Option<ThetaTable> {
        let cells = d.dom.iter().map(|m| m.trailing_zeros() as u8).collect();
        let theta = ThetaTable::from_cells(self.n, cells);
        // Every constraint was enforced during propagation; this is a guard.
        let ok = satisfies_pentagon(self.s, &theta) && self.filters.accepts(self.s, &theta);
        debug_assert!(ok, "propagation admitted a non-solution");
        ok.then_some(theta)
    }

    /// Depth-first enumeration below `d`, appending leaves in lexicographic order.
    pub fn solve(&self, d: &mut Domains, out: &mut Vec<ThetaTable>) {
        if !self.propagate(d) {
            return;
        }
        let Some(cell) = self.first_open(d) else {
            out.extend(self.leaf(d));
            return;
        };
        let mut values = d.dom[cell];
        while values != 0 {
            let v = values.trailing_zeros() as usize;
            values &= values - 1;
            let mark = d.mark();
            d.restrict(cell, bit(v)).expect("value taken from the domain");
            self.solve(d, out);
            d.undo(mark);
        }
    }

    /// Partial states in which the whole first row is fixed, in search order.
    /// Solving each of them in turn reproduces [`Engine::solve`] exactly.
    pub fn first_row_frontier(&self, d: &mut Domains, out: &mut Vec<Domains>) {
        if !self.propagate(d) {
            return;
        }
        match self.first_open(d) {
            Some(cell) if cell < self.n => {
                let mut values = d.dom[cell];
                while values != 0 {
                    let v = values.trailing_zeros() as usize;
                    values &= values - 1;
                    let mark = d.mark();
                    d.restrict(cell, bit(v)).expect("value taken from the domain");
                    self.first_row_frontier(d, out);
                    d.undo(mark);
                }
            }
            _ => out.push(Domains { dom: d.dom.clone(), trail: Vec::new() }),
        }
    }
}

fn c1_holds(s: &FiniteSemigroup) -> bool {
    let n = s.order();
    (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| s.mul(s.mul(x, z), y) == s.mul(s.mul(x, y), z))))
}
