//! Universal coloring families.
//!
//! An `(n, k, c)`-universal coloring family is a set of maps
//! `{1..n} -> {1..c}` such that for every `k`-subset `S` and every target
//! map `mu: S -> {1..c}` some member agrees with `mu` on `S`.
//!
//! The family built here is the composition `omega . lambda_{p,a}` where
//! `lambda_{p,a}(x) = (a*x mod p) mod k^2` ranges over every integer
//! `2 <= p <= p_bound` and `0 <= a < p`, and `omega` ranges over all maps
//! `{0..k^2-1} -> {1..c}`. Members are indexed in the canonical order
//! (`p`, then `a`, then `omega` read as a little-endian base-`c` number) and
//! are never materialized: [`get_coloring`] regenerates any member from its
//! ordinal.
//!
//! Solvers do not walk the raw index range. A member only depends on `omega`
//! restricted to the image of `lambda_{p,a}`, so [`MemberStream`] yields each
//! distinct function once, at its smallest ordinal, in ascending ordinal
//! order. The first member satisfying a predicate is therefore the same as
//! in a plain scan of the whole family.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{domain, guard, Error, Result};

/// Largest `c^n` for which member streams deduplicate whole colorings.
const DEDUP_LIMIT: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParams {
    n: usize,
    k: usize,
    c: usize,
    multiplier: usize,
    p_bound: u64,
}

/// Builds the parameters of the `(n, k, c)` family, computing the prime
/// bound `max(2, multiplier * ceil(k^2 * log2(max(n, 2))))`.
pub fn family_params(n: usize, k: usize, c: usize, multiplier: usize) -> Result<FamilyParams> {
    FamilyParams::new(n, k, c, multiplier)
}

impl FamilyParams {
    pub fn new(n: usize, k: usize, c: usize, multiplier: usize) -> Result<Self> {
        if n == 0 || k == 0 || c == 0 || multiplier == 0 {
            return Err(domain(format!(
                "family parameters must be positive (n={n}, k={k}, c={c}, multiplier={multiplier})"
            )));
        }
        if k > n {
            return Err(domain(format!("subset size k={k} exceeds universe size n={n}")));
        }
        if c > u8::MAX as usize {
            return Err(domain(format!("at most 255 colors are supported, got {c}")));
        }
        let p_bound = (multiplier as u64)
            .checked_mul(ceil_log2_pow(n.max(2), k * k))
            .ok_or_else(|| domain("prime bound overflows"))?
            .max(2);
        Ok(FamilyParams { n, k, c, multiplier, p_bound })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn multiplier(&self) -> usize {
        self.multiplier
    }

    pub fn p_bound(&self) -> u64 {
        self.p_bound
    }

    /// Number of hash buckets, `k^2`.
    pub fn buckets(&self) -> usize {
        self.k * self.k
    }

    /// `c^(k^2)`: the number of `omega` maps, i.e. members per `(p, a)` block.
    pub fn omega_count(&self) -> BigUint {
        BigUint::from(self.c).pow(self.buckets() as u32)
    }

    /// Exact number of `(p, a, omega)` triples: `sum_{p=2}^{P} p * c^(k^2)`.
    pub fn family_size(&self) -> BigUint {
        let p = BigUint::from(self.p_bound);
        let pairs = (&p * (&p + 1u32)) / 2u32 - 1u32;
        pairs * self.omega_count()
    }

    /// The closed-form bound `c^(k^2) * k^4 * ceil(log2 n)^2 * multiplier^2`.
    pub fn size_bound(&self) -> BigUint {
        let log = ceil_log2(self.n.max(2)) as u64;
        let k4 = (self.k as u64).pow(4);
        let m2 = (self.multiplier as u64).pow(2);
        self.omega_count() * BigUint::from(k4) * BigUint::from(log * log) * BigUint::from(m2)
    }

    /// Number of `(p, a)` blocks.
    pub fn block_count(&self) -> u64 {
        self.p_bound * (self.p_bound + 1) / 2 - 1
    }

    /// All hash blocks in canonical order.
    pub fn blocks(&self) -> impl Iterator<Item = HashBlock> + '_ {
        let buckets = self.buckets() as u64;
        (2..=self.p_bound).flat_map(move |p| (0..p).map(move |a| HashBlock { p, a, buckets }))
    }

    /// Ordinal of the first member of block `(p, a)`.
    fn block_offset(&self, p: u64, a: u64) -> BigUint {
        let before = (p - 1) * p / 2 - 1;
        (BigUint::from(before) + BigUint::from(a)) * self.omega_count()
    }

    /// Ordinal of a member given its block and its `omega` digits over the
    /// block's image.
    pub fn ordinal(&self, key: &MemberKey) -> BigUint {
        let c = BigUint::from(self.c);
        let mut omega = BigUint::zero();
        for (&pos, &digit) in key.image.iter().zip(&key.digits) {
            if digit > 1 {
                omega += BigUint::from(digit - 1) * c.pow(pos);
            }
        }
        self.block_offset(key.block.p, key.block.a) + omega
    }
}

/// `ceil(log2(n))` for `n >= 1`.
fn ceil_log2(n: usize) -> u32 {
    usize::BITS - (n - 1).leading_zeros()
}

/// `ceil(e * log2(n))` computed exactly as the bit length of `n^e - 1`.
fn ceil_log2_pow(n: usize, e: usize) -> u64 {
    let pow = BigUint::from(n).pow(e as u32);
    (pow - 1u32).bits()
}

/// The hash layer `lambda_{p,a}(x) = (a*x mod p) mod k^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HashBlock {
    pub p: u64,
    pub a: u64,
    buckets: u64,
}

impl HashBlock {
    pub fn new(p: u64, a: u64, k: usize) -> Self {
        HashBlock { p, a, buckets: (k * k) as u64 }
    }

    /// Bucket of the 1-indexed element `x`.
    #[inline]
    pub fn bucket(&self, x: usize) -> usize {
        ((self.a * x as u64 % self.p) % self.buckets) as usize
    }

    pub fn buckets(&self) -> usize {
        self.buckets as usize
    }
}

/// One member function of the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    /// `values[x - 1]` is the color of element `x`, in `1..=c`.
    pub values: Vec<u8>,
    pub index: BigUint,
}

/// Regenerates the member at `index` in the canonical order.
pub fn get_coloring(params: &FamilyParams, index: &BigUint) -> Result<Coloring> {
    if index >= &params.family_size() {
        return Err(Error::IndexOutOfRange(format!("{index} >= family size {}", params.family_size())));
    }
    let width = params.omega_count();
    let mut rem = index.clone();
    let mut p = 2u64;
    loop {
        let block = &width * p;
        if rem < block {
            break;
        }
        rem -= block;
        p += 1;
    }
    let a = (&rem / &width).to_u64().expect("a < p fits in u64");
    let omega = rem % &width;
    let digits = if params.c == 1 { Vec::new() } else { omega.to_radix_le(params.c as u32) };
    let block = HashBlock::new(p, a, params.k);
    let values = (1..=params.n).map(|x| digits.get(block.bucket(x)).copied().unwrap_or(0) + 1).collect();
    Ok(Coloring { values, index: index.clone() })
}

/// Identifies a member by its block and by `omega` restricted to the
/// block's image; `omega` is 1 everywhere else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberKey {
    pub block: HashBlock,
    image: Arc<[u32]>,
    digits: Vec<u8>,
}

/// A member produced by a stream, with the key needed to recover its
/// ordinal on demand.
#[derive(Debug, Clone)]
pub struct Member {
    pub values: Vec<u8>,
    pub key: MemberRef,
}

#[derive(Debug, Clone)]
pub enum MemberRef {
    Family(MemberKey),
    /// Position in the plain enumeration of all `c^n` colorings.
    Plain(u64),
}

/// Streams the distinct members of a family in ascending ordinal order.
///
/// Within a block only `omega` restricted to the block's image varies.
/// When `c^n` is small enough whole colorings are also deduplicated across
/// blocks and the stream stops once every possible coloring has appeared.
#[derive(Debug)]
pub struct MemberStream {
    params: FamilyParams,
    p: u64,
    a: u64,
    image: Arc<[u32]>,
    rank: Vec<usize>,
    digits: Vec<u8>,
    started: bool,
    seen: Option<Vec<u64>>,
    seen_count: u64,
    distinct_total: u64,
    powers: Vec<u64>,
    done: bool,
}

impl MemberStream {
    pub fn new(params: FamilyParams) -> Self {
        let n = params.n;
        let c = params.c as u64;
        let distinct_total = (c as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        let (seen, powers, distinct_total) = if distinct_total <= DEDUP_LIMIT as u128 {
            let total = distinct_total as u64;
            let powers = (0..n).map(|i| c.pow(i as u32)).collect();
            (Some(vec![0u64; (total as usize).div_ceil(64)]), powers, total)
        } else {
            (None, Vec::new(), u64::MAX)
        };
        MemberStream {
            params,
            p: 2,
            a: 0,
            image: Arc::from(Vec::new()),
            rank: Vec::new(),
            digits: Vec::new(),
            started: false,
            seen,
            seen_count: 0,
            distinct_total,
            powers,
            done: false,
        }
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    fn load_block(&mut self) {
        let block = HashBlock::new(self.p, self.a, self.params.k);
        let mut buckets: Vec<u32> = (1..=self.params.n).map(|x| block.bucket(x) as u32).collect();
        let raw = buckets.clone();
        buckets.sort_unstable();
        buckets.dedup();
        self.rank = raw.iter().map(|b| buckets.binary_search(b).expect("bucket is in image")).collect();
        self.digits = vec![1; buckets.len()];
        self.image = Arc::from(buckets);
    }

    /// Advances to the next block; false when the family is exhausted.
    fn next_block(&mut self) -> bool {
        if self.started {
            self.a += 1;
            if self.a == self.p {
                self.p += 1;
                self.a = 0;
            }
        }
        self.started = true;
        if self.p > self.params.p_bound {
            return false;
        }
        self.load_block();
        true
    }

    /// Little-endian increment of the digits; false on wrap-around.
    fn bump(&mut self) -> bool {
        let c = self.params.c as u8;
        for d in self.digits.iter_mut() {
            if *d < c {
                *d += 1;
                return true;
            }
            *d = 1;
        }
        false
    }
}

impl Iterator for MemberStream {
    type Item = Member;

    fn next(&mut self) -> Option<Member> {
        if self.done {
            return None;
        }
        loop {
            if (!self.started || !self.bump()) && !self.next_block() {
                self.done = true;
                return None;
            }
            let values: Vec<u8> = self.rank.iter().map(|&r| self.digits[r]).collect();
            if let Some(seen) = self.seen.as_mut() {
                let code: u64 = values.iter().zip(&self.powers).map(|(&v, &w)| (v as u64 - 1) * w).sum();
                let (word, bit) = ((code / 64) as usize, code % 64);
                if seen[word] >> bit & 1 == 1 {
                    continue;
                }
                seen[word] |= 1 << bit;
                self.seen_count += 1;
                if self.seen_count == self.distinct_total {
                    self.done = true;
                }
            }
            let key = MemberKey {
                block: HashBlock::new(self.p, self.a, self.params.k),
                image: Arc::clone(&self.image),
                digits: self.digits.clone(),
            };
            return Some(Member { values, key: MemberRef::Family(key) });
        }
    }
}

/// All `c^n` colorings in little-endian order. Only used as a cross-check
/// engine, so it is guarded.
#[derive(Debug)]
pub struct ExhaustiveStream {
    n: usize,
    c: u8,
    current: Vec<u8>,
    position: u64,
    total: u64,
}

impl ExhaustiveStream {
    pub fn new(n: usize, c: usize) -> Result<Self> {
        if c == 0 || c > u8::MAX as usize {
            return Err(domain(format!("color count {c} out of range")));
        }
        let total = (c as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        if total > DEDUP_LIMIT as u128 {
            return Err(guard(format!("exhaustive engine needs {c}^{n} colorings (limit {DEDUP_LIMIT})")));
        }
        Ok(ExhaustiveStream { n, c: c as u8, current: vec![1; n], position: 0, total: total as u64 })
    }

    pub fn total(&self) -> u64 {
        self.total
    }
}

impl Iterator for ExhaustiveStream {
    type Item = Member;

    fn next(&mut self) -> Option<Member> {
        if self.position >= self.total {
            return None;
        }
        let out = Member { values: self.current.clone(), key: MemberRef::Plain(self.position) };
        self.position += 1;
        for d in self.current.iter_mut().take(self.n) {
            if *d < self.c {
                *d += 1;
                break;
            }
            *d = 1;
        }
        Some(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub covered: bool,
    /// A 1-indexed subset together with the target colors that no member
    /// realizes on it.
    pub counterexample: Option<(Vec<usize>, Vec<u8>)>,
    /// Distinct member functions inspected.
    pub members_checked: u64,
}

/// Guard for [`verify_family`] and family dumps.
pub fn check_enumeration_guard(params: &FamilyParams) -> Result<()> {
    if params.n > 16 || params.k > 3 || params.c > 4 {
        return Err(guard(format!(
            "exhaustive family checks need n <= 16, k <= 3, c <= 4 (got n={}, k={}, c={})",
            params.n, params.k, params.c
        )));
    }
    Ok(())
}

/// Checks universality by brute force over every `k`-subset and every
/// target map.
pub fn verify_family(params: &FamilyParams) -> Result<CoverageReport> {
    check_enumeration_guard(params)?;
    let subsets = k_subsets(params.n, params.k);
    let targets = params.c.pow(params.k as u32);
    let words = targets.div_ceil(64);
    let mut hit = vec![0u64; subsets.len() * words];
    let mut missing = subsets.len() * targets;
    let mut checked = 0u64;
    let c = params.c;

    for member in MemberStream::new(params.clone()) {
        checked += 1;
        for (s, subset) in subsets.iter().enumerate() {
            let code = subset.iter().rev().fold(0usize, |acc, &x| acc * c + (member.values[x - 1] as usize - 1));
            let slot = &mut hit[s * words + code / 64];
            if *slot >> (code % 64) & 1 == 0 {
                *slot |= 1 << (code % 64);
                missing -= 1;
            }
        }
        if missing == 0 {
            break;
        }
    }

    let counterexample = (missing > 0)
        .then(|| {
            subsets.iter().enumerate().find_map(|(s, subset)| {
                (0..targets).find(|&code| hit[s * words + code / 64] >> (code % 64) & 1 == 0).map(|code| {
                    let mut rest = code;
                    let mu = subset
                        .iter()
                        .map(|_| {
                            let d = (rest % c) as u8 + 1;
                            rest /= c;
                            d
                        })
                        .collect();
                    (subset.clone(), mu)
                })
            })
        })
        .flatten();
    Ok(CoverageReport { covered: missing == 0, counterexample, members_checked: checked })
}

/// Lexicographically ordered `k`-subsets of `{1..n}`.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - (k - 1 - i) {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
        if k == 0 {
            return out;
        }
    }
}

/// Writes every member of the family in canonical order: a header line
/// `ucf <n> <k> <c> <count>` followed by one line of `n` colors per member.
pub fn write_family<W: std::io::Write>(params: &FamilyParams, mut out: W) -> Result<()> {
    check_enumeration_guard(params)?;
    let io = |e: std::io::Error| domain(format!("write failed: {e}"));
    writeln!(out, "ucf {} {} {} {}", params.n, params.k, params.c, params.family_size()).map_err(io)?;
    let width = params.buckets();
    let c = params.c as u8;
    let mut line = String::new();
    for block in params.blocks() {
        let mut omega = vec![1u8; width];
        loop {
            line.clear();
            for x in 1..=params.n {
                if x > 1 {
                    line.push(' ');
                }
                line.push_str(&omega[block.bucket(x)].to_string());
            }
            writeln!(out, "{line}").map_err(io)?;
            if !omega.iter_mut().any(|d| {
                if *d < c {
                    *d += 1;
                    true
                } else {
                    *d = 1;
                    false
                }
            }) {
                break;
            }
        }
    }
    Ok(())
}

/// Decides whether `bits` holds at least `t` ones by searching the
/// `(|bits|, t, t)` family for a coloring whose every color class contains
/// a one.
///
/// A block `(p, a)` contains such a coloring exactly when `lambda_{p,a}`
/// takes at least `t` distinct values on the one-positions (then some
/// `omega` maps those buckets onto all `t` colors), so blocks are tested
/// whole.
pub fn threshold(bits: &[bool], t: usize) -> Result<bool> {
    if t == 0 {
        return Err(domain("threshold t must be at least 1"));
    }
    if t > bits.len() {
        return Ok(false);
    }
    let params = FamilyParams::new(bits.len(), t, t, 1)?;
    let ones: Vec<usize> = (1..=bits.len()).filter(|&x| bits[x - 1]).collect();
    let hit = crate::runner::search_blocks(&params, crate::runner::Exec::default(), |block| {
        let mut seen = vec![false; block.buckets()];
        let mut distinct = 0;
        for &x in &ones {
            let b = block.bucket(x);
            if !seen[b] {
                seen[b] = true;
                distinct += 1;
                if distinct >= t {
                    return Some(());
                }
            }
        }
        None
    });
    Ok(hit.0.is_some())
}
