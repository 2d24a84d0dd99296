//! Bead-moving operations on beta sets: `up`/`roof` at charge `m`,
//! `down`/`base` at charge `0`, the charge shift `tau`, and the resulting
//! non-recursive Kleshchev characterization.

use serde::{Deserialize, Serialize};

use crate::bipartition::Bipartition;
use crate::error::{Error, Result};
use crate::partition::{BetaSet, Params, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveKind {
    Up,
    Down,
}

/// Record of a single bead move, kept for tracing.
///
/// For `Up`: `candidates` is `U`, `window` is `V`, `extremum` is `p = max U`,
/// the bead `p` moves to `q = min V`.  For `Down`: `candidates` is `U`,
/// `window` is `W`, `extremum` is `p' = min U`, the bead `q' = min W` moves
/// to `p' - e`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbacusMove {
    pub kind: MoveKind,
    pub removed_bead: i64,
    pub added_bead: i64,
    pub candidates: Vec<i64>,
    pub window: Vec<i64>,
    pub extremum: i64,
}

/// Runner maxima of the charge-0 beta set of an e-core, and the beads
/// adjoined by `tau`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauData {
    /// `(residue class, M_i)` for every runner.
    pub runner_maxima: Vec<(u32, i64)>,
    /// `M + e` for the `m` largest maxima.
    pub added_beads: Vec<i64>,
}

/// Beads whose e-predecessor is missing.  Tail beads never qualify, so the
/// set is window-local.
fn set_u(beta: &BetaSet, e: i64) -> Vec<i64> {
    beta.window()
        .iter()
        .copied()
        .filter(|&x| !beta.member(x - e))
        .collect()
}

fn up_step_beta(beta: &BetaSet, e: i64) -> Option<(BetaSet, AbacusMove)> {
    let u = set_u(beta, e);
    let &p = u.iter().max()?;
    // V = { x > p : x != p mod e, x - e in J, x not in J }; nonempty for
    // e-restricted input, scan bounded by the top bead plus e as a fuse.
    let limit = beta.window().first().copied().unwrap_or(p) + e + 1;
    let mut v = Vec::new();
    for x in p + 1..=limit {
        if (x - p).rem_euclid(e) != 0 && beta.member(x - e) && !beta.member(x) {
            v.push(x);
        }
    }
    let &q = v
        .first()
        .expect("V is nonempty for an e-restricted partition");
    let moved = beta.replace(p, q);
    Some((
        moved,
        AbacusMove {
            kind: MoveKind::Up,
            removed_bead: p,
            added_bead: q,
            candidates: u,
            window: v,
            extremum: p,
        },
    ))
}

fn down_step_beta(beta: &BetaSet, e: i64) -> Option<(BetaSet, AbacusMove)> {
    let u = set_u(beta, e);
    let &p = u.iter().min()?;
    // W = { x > p' - e : x in J, x + e not in J } plus p' itself; since
    // p' - e is above the tail, W is window-local.
    let mut w: Vec<i64> = beta
        .window()
        .iter()
        .copied()
        .filter(|&x| x > p - e && !beta.member(x + e))
        .collect();
    if !w.contains(&p) {
        w.push(p);
    }
    w.sort_unstable();
    let q = w[0];
    let moved = beta.replace(q, p - e);
    Some((
        moved,
        AbacusMove {
            kind: MoveKind::Down,
            removed_bead: q,
            added_bead: p - e,
            candidates: u,
            window: w,
            extremum: p,
        },
    ))
}

fn require_restricted(lam: &Partition, e: u32) -> Result<()> {
    if lam.is_e_restricted(e) {
        Ok(())
    } else {
        Err(Error::NotERestricted(lam.to_string(), e))
    }
}

/// One `up` move on the charge-m beta set; identity on e-cores.
pub fn up_step(lam: &Partition, params: Params) -> Result<(Partition, Option<AbacusMove>)> {
    require_restricted(lam, params.e())?;
    let beta = lam.beta_set(i64::from(params.m()), lam.default_window_len(params.e()))?;
    match up_step_beta(&beta, i64::from(params.e())) {
        None => Ok((lam.clone(), None)),
        Some((moved, record)) => Ok((moved.partition()?, Some(record))),
    }
}

/// One `down` move on the charge-0 beta set; identity on e-cores.
pub fn down_step(lam: &Partition, e: u32) -> Result<(Partition, Option<AbacusMove>)> {
    require_restricted(lam, e)?;
    let beta = lam.beta_set(0, lam.default_window_len(e))?;
    match down_step_beta(&beta, i64::from(e)) {
        None => Ok((lam.clone(), None)),
        Some((moved, record)) => Ok((moved.partition()?, Some(record))),
    }
}

/// Termination fuse for the iterated moves.
fn fuse(lam: &Partition, e: u32) -> usize {
    (lam.rank() as usize + 1) * (e as usize + 1) + 1
}

/// Iterate `up` to its e-core fixed point, recording every move.
pub fn roof_trace(lam: &Partition, params: Params) -> Result<(Partition, Vec<AbacusMove>)> {
    let mut current = lam.clone();
    let mut moves = Vec::new();
    let limit = fuse(lam, params.e());
    loop {
        let (next, record) = up_step(&current, params)?;
        match record {
            None => return Ok((current, moves)),
            Some(record) => {
                moves.push(record);
                current = next;
            }
        }
        if moves.len() > limit {
            return Err(Error::IterationFuse(limit));
        }
    }
}

/// The e-core reached by iterating `up` at charge `m`.
pub fn roof(lam: &Partition, params: Params) -> Result<Partition> {
    roof_trace(lam, params).map(|(core, _)| core)
}

/// Iterate `down` to its e-core fixed point, recording every move.
pub fn base_trace(lam: &Partition, e: u32) -> Result<(Partition, Vec<AbacusMove>)> {
    let mut current = lam.clone();
    let mut moves = Vec::new();
    let limit = fuse(lam, e);
    loop {
        let (next, record) = down_step(&current, e)?;
        match record {
            None => return Ok((current, moves)),
            Some(record) => {
                moves.push(record);
                current = next;
            }
        }
        if moves.len() > limit {
            return Err(Error::IterationFuse(limit));
        }
    }
}

/// The e-core reached by iterating `down` at charge `0`.
pub fn base(lam: &Partition, e: u32) -> Result<Partition> {
    base_trace(lam, e).map(|(core, _)| core)
}

/// Charge shift of an e-core: adjoin `m` beads at the `m` largest runner
/// maxima plus `e` of the charge-0 beta set, reinterpret at charge `m`.
pub fn tau_trace(core: &Partition, params: Params) -> Result<(Partition, TauData)> {
    tau_with_window(core, params, core.default_window_len(params.e()))
}

fn tau_with_window(
    core: &Partition,
    params: Params,
    window_len: usize,
) -> Result<(Partition, TauData)> {
    let e = i64::from(params.e());
    if !core.is_e_core(params.e()) {
        return Err(Error::NotECore(core.to_string(), params.e()));
    }
    let beta = core.beta_set(0, window_len)?;
    let mut maxima = Vec::new();
    for i in 0..params.e() {
        let on_runner = beta
            .window()
            .iter()
            .copied()
            .filter(|&x| x.rem_euclid(e) == i64::from(i))
            .max();
        // Runners with no window bead take their maximum from the tail.
        let max = on_runner.unwrap_or_else(|| {
            beta.tail_bound() - (beta.tail_bound() - i64::from(i)).rem_euclid(e)
        });
        maxima.push((i, max));
    }
    let mut by_value = maxima.clone();
    by_value.sort_by_key(|&(_, max)| std::cmp::Reverse(max));
    let added: Vec<i64> = by_value
        .iter()
        .take(params.m() as usize)
        .map(|&(_, max)| max + e)
        .collect();

    let mut window: Vec<i64> = beta.window().to_vec();
    window.extend(&added);
    window.sort_unstable_by(|a, b| b.cmp(a));
    let shifted = BetaSet::new(i64::from(params.m()), window, beta.tail_bound())?;
    Ok((
        shifted.partition()?,
        TauData {
            runner_maxima: maxima,
            added_beads: added,
        },
    ))
}

pub fn tau(core: &Partition, params: Params) -> Result<Partition> {
    tau_trace(core, params).map(|(lam, _)| lam)
}

/// Non-recursive Kleshchev characterization: both components e-restricted
/// and `roof_m` of the first contained in `tau_m(base_0)` of the second.
/// E-restrictedness of both components is necessary for Kleshchevness, so
/// its failure yields `false` rather than an error.
pub fn akt_is_kleshchev(bp: &Bipartition, params: Params) -> bool {
    if !bp.first().is_e_restricted(params.e()) || !bp.second().is_e_restricted(params.e()) {
        return false;
    }
    let roof1 = roof(bp.first(), params).expect("first component is e-restricted");
    let base2 = base(bp.second(), params.e()).expect("second component is e-restricted");
    let tau2 = tau(&base2, params).expect("base is an e-core");
    roof1.is_contained_in(&tau2)
}
