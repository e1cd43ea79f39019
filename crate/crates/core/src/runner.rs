//! Evaluation of a predicate over a coloring schedule.
//!
//! Every solver in this crate reduces to "find the first coloring, in
//! canonical order, for which a per-coloring computation succeeds". The
//! per-coloring computations are independent, so they are evaluated in
//! batches with an ordered first-success reduction: the reported hit is the
//! one with the smallest ordinal no matter how many workers ran.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::coloring::{ExhaustiveStream, FamilyParams, HashBlock, Member, MemberRef, MemberStream};
use crate::error::Result;

/// How a search distributes its per-coloring work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// Uses the ambient rayon pool. Without the `parallel` feature this is
    /// the same as `Sequential`.
    #[default]
    Parallel,
}

/// Which set of colorings a solver searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// The universal coloring family.
    #[default]
    ColorCode,
    /// Every coloring of the universe; a guarded cross-check.
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub engine: Engine,
    pub exec: Exec,
    pub multiplier: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { engine: Engine::ColorCode, exec: Exec::Parallel, multiplier: 1 }
    }
}

impl SolveOptions {
    pub fn with_engine(mut self, engine: Engine) -> Self {
        self.engine = engine;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }
}

/// Work statistics. Both counters are deterministic: `colorings_checked`
/// counts the schedule prefix up to and including the first success, not
/// whatever a parallel batch happened to evaluate.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub family_size: BigUint,
    pub colorings_checked: BigUint,
}

impl SolveStats {
    pub fn absorb(&mut self, other: &SolveStats) {
        self.family_size += &other.family_size;
        self.colorings_checked += &other.colorings_checked;
    }
}

/// A decision with an optional witness and the work it took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solved<W> {
    pub witness: Option<W>,
    pub stats: SolveStats,
}

impl<W> Solved<W> {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }

    pub fn none(stats: SolveStats) -> Self {
        Solved { witness: None, stats }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Solved<V> {
        Solved { witness: self.witness.map(f), stats: self.stats }
    }
}

/// The colorings a solver walks through.
#[derive(Debug)]
pub enum Schedule {
    Family(MemberStream),
    Exhaustive(ExhaustiveStream),
}

impl Schedule {
    /// Schedule for an `(n, k, c)` search. The subset size is capped at `n`:
    /// an `(n, n, c)` family already realizes every coloring of the universe.
    pub fn new(engine: Engine, n: usize, k: usize, c: usize, multiplier: usize) -> Result<Self> {
        match engine {
            Engine::ColorCode => {
                let params = FamilyParams::new(n, k.min(n), c, multiplier)?;
                Ok(Schedule::Family(MemberStream::new(params)))
            }
            Engine::Exhaustive => Ok(Schedule::Exhaustive(ExhaustiveStream::new(n, c)?)),
        }
    }

    pub fn family_size(&self) -> BigUint {
        match self {
            Schedule::Family(s) => s.params().family_size(),
            Schedule::Exhaustive(s) => BigUint::from(s.total()),
        }
    }

    pub fn ordinal(&self, member: &Member) -> BigUint {
        match (&member.key, self) {
            (MemberRef::Family(key), Schedule::Family(s)) => s.params().ordinal(key),
            (MemberRef::Plain(i), _) => BigUint::from(*i),
            (MemberRef::Family(_), Schedule::Exhaustive(_)) => unreachable!("member from another schedule"),
        }
    }

    fn next_member(&mut self) -> Option<Member> {
        match self {
            Schedule::Family(s) => s.next(),
            Schedule::Exhaustive(s) => s.next(),
        }
    }
}

/// The first successful coloring.
#[derive(Debug, Clone)]
pub struct Hit<T> {
    pub ordinal: BigUint,
    pub values: Vec<u8>,
    pub value: T,
}

const FIRST_BATCH: usize = 256;
const MAX_BATCH: usize = 1 << 16;

/// Runs `f` over the schedule and returns the first success in schedule
/// order.
pub fn search_members<T, F>(schedule: &mut Schedule, exec: Exec, f: F) -> (Option<Hit<T>>, SolveStats)
where
    T: Send,
    F: Fn(&[u8]) -> Option<T> + Sync,
{
    let family_size = schedule.family_size();
    let mut checked = 0u64;
    let mut batch_size = FIRST_BATCH;
    let mut batch: Vec<Member> = Vec::with_capacity(batch_size);
    loop {
        batch.clear();
        while batch.len() < batch_size {
            match schedule.next_member() {
                Some(m) => batch.push(m),
                None => break,
            }
        }
        if batch.is_empty() {
            let stats = SolveStats { family_size, colorings_checked: BigUint::from(checked) };
            return (None, stats);
        }
        if let Some((pos, value)) = first_in_batch(&batch, exec, &f) {
            checked += pos as u64 + 1;
            let member = &batch[pos];
            let hit = Hit { ordinal: schedule.ordinal(member), values: member.values.clone(), value };
            let stats = SolveStats { family_size, colorings_checked: BigUint::from(checked) };
            return (Some(hit), stats);
        }
        checked += batch.len() as u64;
        batch_size = (batch_size * 2).min(MAX_BATCH);
    }
}

fn first_in_batch<T, F>(batch: &[Member], exec: Exec, f: &F) -> Option<(usize, T)>
where
    T: Send,
    F: Fn(&[u8]) -> Option<T> + Sync,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            batch.par_iter().enumerate().find_map_first(|(i, m)| f(&m.values).map(|v| (i, v)))
        }
        _ => batch.iter().enumerate().find_map(|(i, m)| f(&m.values).map(|v| (i, v))),
    }
}

/// Runs `f` over whole `(p, a)` blocks of a family. Used where a solver can
/// decide "does some `omega` in this block succeed" directly; a block then
/// stands for all `c^(k^2)` of its members in the statistics.
pub fn search_blocks<T, F>(params: &FamilyParams, exec: Exec, f: F) -> (Option<(HashBlock, T)>, SolveStats)
where
    T: Send,
    F: Fn(&HashBlock) -> Option<T> + Sync,
{
    let blocks: Vec<HashBlock> = params.blocks().collect();
    let found = match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            blocks.par_iter().enumerate().find_map_first(|(i, b)| f(b).map(|v| (i, v)))
        }
        _ => blocks.iter().enumerate().find_map(|(i, b)| f(b).map(|v| (i, v))),
    };
    let per_block = params.omega_count();
    let visited = found.as_ref().map_or(blocks.len(), |(i, _)| i + 1);
    let stats = SolveStats { family_size: params.family_size(), colorings_checked: per_block * BigUint::from(visited) };
    (found.map(|(i, v)| (blocks[i], v)), stats)
}

/// Stats for a decision made without consulting any coloring.
pub fn no_work() -> SolveStats {
    SolveStats { family_size: BigUint::zero(), colorings_checked: BigUint::zero() }
}
