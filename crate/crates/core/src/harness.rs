//! Exhaustive cross-validation of the fast criteria against the oracle.
//!
//! Each suite walks its whole parameter range and tallies pass/fail per named
//! check. Failures are recorded as counterexamples, never raised.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::geometry::{
    lattice_points_in, parallelepiped_interior_bruteforce, parallelepiped_interior_points, volume6, PointLocation,
    Tetrahedron,
};
use crate::intlin::{gcd, AffineUnimodularMap, IntMatrix3, IntVec3};
use crate::normalize::canonicalize;
use crate::whitefn::{
    check_sum_system, f_n, f_support, floor_multiples, is_clean_canonical, satisfies_system, white_empty,
    CanonicalForm,
};

pub const DEFAULT_WHITE_MAX_C: i64 = 25;
pub const DEFAULT_COPLANAR_MAX_C: i64 = 25;
pub const DEFAULT_FN_MAX_C: i64 = 100;
pub const DEFAULT_NORMALIZE_MAX_C: i64 = 10;
pub const DEFAULT_NORMALIZE_TRIALS: u64 = 1000;
pub const DEFAULT_SEED: u64 = 0;
pub const DEFAULT_WITNESS_MAX_C: i64 = 50;
pub const DEFAULT_WITNESS_ORACLE_MAX_C: i64 = 25;

/// Stored counterexamples per report; tallies keep counting past this.
const MAX_COUNTEREXAMPLES: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckTally {
    pub name: String,
    pub passed: u64,
    pub failed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub check: String,
    pub detail: String,
}

/// Outcome of one suite run.
///
/// `duration` is wall-clock and excluded from serialization so that the
/// serialized report depends only on the parameters.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub range: String,
    pub c_max: Option<i64>,
    pub trials: Option<u64>,
    pub seed: Option<u64>,
    pub cases: u64,
    pub checks: Vec<CheckTally>,
    pub counterexamples: Vec<Counterexample>,
    #[serde(skip)]
    pub duration: Duration,
}

impl PartialEq for VerificationReport {
    fn eq(&self, o: &Self) -> bool {
        self.suite == o.suite
            && self.range == o.range
            && self.c_max == o.c_max
            && self.trials == o.trials
            && self.seed == o.seed
            && self.cases == o.cases
            && self.checks == o.checks
            && self.counterexamples == o.counterexamples
    }
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn tally(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn total_failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }
}

struct Recorder {
    report: VerificationReport,
    started: Instant,
}

impl Recorder {
    fn new(suite: &str, range: String, c_max: Option<i64>, trials: Option<u64>, seed: Option<u64>) -> Self {
        Recorder {
            report: VerificationReport {
                suite: suite.to_string(),
                range,
                c_max,
                trials,
                seed,
                cases: 0,
                checks: Vec::new(),
                counterexamples: Vec::new(),
                duration: Duration::ZERO,
            },
            started: Instant::now(),
        }
    }

    fn case(&mut self) {
        self.report.cases += 1;
    }

    fn tally_mut(&mut self, name: &str) -> &mut CheckTally {
        let pos = match self.report.checks.iter().position(|c| c.name == name) {
            Some(p) => p,
            None => {
                self.report.checks.push(CheckTally { name: name.to_string(), passed: 0, failed: 0 });
                self.report.checks.len() - 1
            }
        };
        &mut self.report.checks[pos]
    }

    fn check(&mut self, name: &str, ok: bool, detail: impl FnOnce() -> String) {
        let t = self.tally_mut(name);
        if ok {
            t.passed += 1;
        } else {
            t.failed += 1;
            self.fail(name, detail());
        }
    }

    fn fail(&mut self, name: &str, detail: String) {
        if self.report.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.report.counterexamples.push(Counterexample { check: name.to_string(), detail });
        }
    }

    /// Records an unexpected error as a failure of `name`.
    fn check_result<T>(&mut self, name: &str, r: Result<T>, ctx: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.tally_mut(name).failed += 1;
                self.fail(name, format!("{}: error {e}", ctx()));
                None
            }
        }
    }

    fn finish(mut self) -> VerificationReport {
        self.report.duration = self.started.elapsed();
        self.report
    }
}

type PlaneTest = fn(&IntVec3) -> bool;

fn forms_up_to(c_max: i64) -> impl Iterator<Item = CanonicalForm> {
    (1..=c_max).flat_map(|c| (0..c).flat_map(move |a| (0..c).map(move |b| CanonicalForm::new(a, b, c).unwrap())))
}

/// Oracle verdicts `(empty, clean)` for `T_{a,b,c}`.
fn oracle_verdicts(cf: &CanonicalForm) -> Result<(bool, bool)> {
    let t = Tetrahedron::standard(cf.a, cf.b, cf.c)?;
    let pts = lattice_points_in(&t)?;
    let empty = pts.iter().all(|&(_, l)| l == PointLocation::Vertex);
    let clean = pts.iter().all(|&(_, l)| l != PointLocation::BoundaryNonVertex);
    Ok((empty, clean))
}

/// Emptiness and cleanness criteria and both equation systems against the
/// oracle, for every `T_{a,b,c}` with `c <= c_max`.
pub fn verify_white(c_max: i64) -> VerificationReport {
    let mut rec = Recorder::new("white", format!("1 <= c <= {c_max}, 0 <= a,b < c"), Some(c_max), None, None);
    for cf in forms_up_to(c_max) {
        rec.case();
        let Some((empty, clean)) = rec.check_result("oracle", oracle_verdicts(&cf), || cf.to_string()) else {
            continue;
        };
        let fast_empty = white_empty(&cf);
        rec.check("white_empty = oracle", fast_empty == empty, || {
            format!("{cf}: white_empty={fast_empty}, oracle empty={empty}")
        });
        let fast_clean = is_clean_canonical(&cf);
        rec.check("is_clean_canonical = oracle", fast_clean == clean, || {
            format!("{cf}: gcd criterion={fast_clean}, oracle clean={clean}")
        });
        if fast_clean && cf.c > 1 {
            if let Some(s) = rec.check_result("satisfies_system = oracle", satisfies_system(&cf), || cf.to_string()) {
                rec.check("satisfies_system = oracle", s == empty, || {
                    format!("{cf}: fractional system={s}, oracle empty={empty}")
                });
            }
            if let Some(s) = rec.check_result("check_sum_system = oracle", check_sum_system(&cf), || cf.to_string()) {
                rec.check("check_sum_system = oracle", s == empty, || {
                    format!("{cf}: f_n system={s}, oracle empty={empty}")
                });
            }
        }
    }
    rec.finish()
}

/// Interior points of `P_{a,b,c}`: count and generator-vs-scan for every clean
/// form, and the plane of each satisfied unit clause for every empty form.
pub fn verify_coplanarity(c_max: i64) -> VerificationReport {
    let mut rec = Recorder::new("coplanar", format!("1 <= c <= {c_max}, clean forms"), Some(c_max), None, None);
    for cf in forms_up_to(c_max).filter(is_clean_canonical) {
        rec.case();
        let ctx = || cf.to_string();
        let Some(mut pts) = rec.check_result("interior count", parallelepiped_interior_points(cf.a, cf.b, cf.c), ctx)
        else {
            continue;
        };
        rec.check("interior count", pts.len() as i64 == cf.c - 1, || {
            format!("{cf}: {} interior points, expected {}", pts.len(), cf.c - 1)
        });

        let scan = parallelepiped_interior_bruteforce(IntVec3::E1, IntVec3::E2, IntVec3::new(cf.a, cf.b, cf.c));
        if let Some(scan) = rec.check_result("generator = oracle scan", scan, ctx) {
            let mut sorted = pts.clone();
            sorted.sort();
            rec.check("generator = oracle scan", sorted == scan, || {
                format!("{cf}: generator {sorted:?} vs scan {scan:?}")
            });
        }

        let Some((empty, _)) = rec.check_result("oracle", oracle_verdicts(&cf), ctx) else {
            continue;
        };
        if !empty {
            continue;
        }
        pts.sort();
        let mut planes: Vec<(&str, PlaneTest)> = Vec::new();
        if cf.a == 1 {
            planes.push(("plane x=1 (a=1)", |p| p.x == 1));
        }
        if cf.b == 1 {
            planes.push(("plane y=1 (b=1)", |p| p.y == 1));
        }
        if cf.d == 1 {
            planes.push(("plane x+y-z=1 (d=1)", |p| p.x + p.y - p.z == 1));
        }
        if cf.c > 1 {
            rec.check("empty form has a unit clause", !planes.is_empty(), || {
                format!("{cf}: empty but a, b, d all differ from 1")
            });
        }
        for (name, on_plane) in planes {
            let off: Vec<_> = pts.iter().filter(|p| !on_plane(p)).collect();
            rec.check(name, off.is_empty(), || format!("{cf}: points off the plane: {off:?}"));
        }
    }
    rec.finish()
}

/// Properties (i)–(iii) of `f_n` for all coprime `0 < n < c <= c_max`.
pub fn verify_fn_properties(c_max: i64) -> VerificationReport {
    let mut rec = Recorder::new("fn", format!("2 <= c <= {c_max}, 0 < n < c, gcd(n,c) = 1"), Some(c_max), None, None);
    for c in 2..=c_max {
        for n in (1..c).filter(|&n| gcd(n, c) == 1) {
            rec.case();
            let ctx = || format!("n={n}, c={c}");
            let Some(support) = rec.check_result("support", f_support(n, c), ctx) else {
                continue;
            };
            if n == 1 {
                rec.check("(i) f_1 vanishes", support.is_empty(), || format!("c={c}: support {support:?}"));
            } else if let Some(closed) = rec.check_result("(ii) support = floor multiples", floor_multiples(n, c), ctx) {
                rec.check("(ii) support = floor multiples", support == closed, || {
                    format!("n={n}, c={c}: pointwise {support:?} vs closed form {closed:?}")
                });
            }
            rec.check("(ii) support size n-1", support.len() as i64 == n - 1, || {
                format!("n={n}, c={c}: support size {}", support.len())
            });
            for k in 1..=c - 2 {
                let pair = f_n(n, c, k).and_then(|x| Ok((x, f_n(c - n, c, k)?)));
                if let Some((x, y)) = rec.check_result("(iii) f_(c-n) = 1 - f_n", pair, ctx) {
                    rec.check("(iii) f_(c-n) = 1 - f_n", x <= 1 && x + y == 1, || {
                        format!("n={n}, c={c}, k={k}: f_n={x}, f_(c-n)={y}")
                    });
                }
            }
        }
    }
    rec.finish()
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Product of 6–12 elementary row operations (shears with coefficient in
/// `[-3, 3]`, row permutations, row sign flips) plus a translation in `[-5, 5]³`.
pub fn random_unimodular_map<R: Rng + ?Sized>(rng: &mut R) -> AffineUnimodularMap {
    let mut rows = IntMatrix3::IDENTITY.rows;
    let ops = rng.gen_range(6..=12);
    for _ in 0..ops {
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..3);
                let j = (i + rng.gen_range(1..3)) % 3;
                let q: i64 = rng.gen_range(-3..=3);
                let src = rows[j];
                for (e, s) in rows[i].iter_mut().zip(src) {
                    *e += q * s;
                }
            }
            1 => {
                let p = PERMUTATIONS.choose(rng).unwrap();
                rows = [rows[p[0]], rows[p[1]], rows[p[2]]];
            }
            _ => {
                let i = rng.gen_range(0..3);
                for e in rows[i].iter_mut() {
                    *e = -*e;
                }
            }
        }
    }
    let t = IntVec3::new(rng.gen_range(-5..=5), rng.gen_range(-5..=5), rng.gen_range(-5..=5));
    AffineUnimodularMap::new(IntMatrix3::new(rows), t).expect("elementary operations preserve |det| = 1")
}

/// Seeded round trips: random unimodular image of an empty form, normalized
/// back and compared with the original. Trial 0 uses the identity map.
pub fn verify_normalization(trials: u64, seed: u64, c_max: i64) -> VerificationReport {
    let mut rec = Recorder::new(
        "normalize",
        format!("{trials} trials, empty forms with c <= {c_max}, seed {seed}"),
        Some(c_max),
        Some(trials),
        Some(seed),
    );
    let empties: Vec<CanonicalForm> = forms_up_to(c_max).filter(white_empty).collect();
    if empties.is_empty() {
        rec.fail("setup", format!("no empty forms with c <= {c_max}"));
        return rec.finish();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        rec.case();
        let cf = *empties.choose(&mut rng).unwrap();
        let l = if trial == 0 { AffineUnimodularMap::IDENTITY } else { random_unimodular_map(&mut rng) };
        let ctx = || format!("trial {trial}: {cf} under {l:?}");
        let run = || -> Result<_> {
            let t = Tetrahedron::standard(cf.a, cf.b, cf.c)?;
            let image = t.map(&l)?;
            let base = canonicalize(&t)?;
            let r = canonicalize(&image)?;
            Ok((image, base, r))
        };
        let Some((image, base, r)) = rec.check_result("normalizes", run(), ctx) else {
            continue;
        };
        rec.check("normalizes", true, String::new);
        let sound = r.is_sound_for(&image);
        if let Some(sound) = rec.check_result("witness map is sound", sound, ctx) {
            rec.check("witness map is sound", sound, || format!("{}: map {:?}", ctx(), r.map));
        }
        let vol = volume6(&image);
        if let Some(vol) = rec.check_result("volume preserved", vol, ctx) {
            rec.check("volume preserved", vol == r.form.c && vol == cf.c, || {
                format!("{}: volume6 {vol}, form c {}", ctx(), r.form.c)
            });
        }
        rec.check("canonical form preserved", r.form == base.form, || {
            format!("{}: image form {} vs original {}", ctx(), r.form, base.form)
        });
        rec.check("canonical form stays empty", white_empty(&r.form), || {
            format!("{}: image form {} fails the criterion", ctx(), r.form)
        });
    }
    rec.finish()
}

/// `T_{1,a,c}` and `T_{a,c−a,c}` for all `gcd(a, c) = 1`, `2 <= c <= c_max`;
/// oracle confirmation up to `oracle_c_max`.
pub fn verify_witness_families(c_max: i64, oracle_c_max: i64) -> VerificationReport {
    let mut rec = Recorder::new(
        "witness",
        format!("2 <= c <= {c_max} (oracle up to {oracle_c_max}), gcd(a,c) = 1"),
        Some(c_max),
        None,
        None,
    );
    for c in 2..=c_max {
        for a in (1..c).filter(|&a| gcd(a, c) == 1) {
            for (fam, (x, y)) in [("T(1,a,c)", (1, a)), ("T(a,c-a,c)", (a, c - a))] {
                rec.case();
                let cf = CanonicalForm::new(x, y, c).expect("family parameters lie in [0, c)");
                rec.check(&format!("{fam} white_empty"), white_empty(&cf), || cf.to_string());
                if let Some(s) = rec.check_result(&format!("{fam} satisfies_system"), satisfies_system(&cf), || {
                    cf.to_string()
                }) {
                    rec.check(&format!("{fam} satisfies_system"), s, || cf.to_string());
                }
                if c <= oracle_c_max {
                    let name = format!("{fam} oracle empty");
                    if let Some((empty, _)) = rec.check_result(&name, oracle_verdicts(&cf), || cf.to_string()) {
                        rec.check(&name, empty, || cf.to_string());
                    }
                }
            }
        }
    }
    rec.finish()
}

/// Named verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    White,
    Coplanar,
    Fn,
    Normalize,
    Witness,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::White, Suite::Coplanar, Suite::Fn, Suite::Normalize, Suite::Witness];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::White => "white",
            Suite::Coplanar => "coplanar",
            Suite::Fn => "fn",
            Suite::Normalize => "normalize",
            Suite::Witness => "witness",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    pub fn default_max_c(&self) -> i64 {
        match self {
            Suite::White => DEFAULT_WHITE_MAX_C,
            Suite::Coplanar => DEFAULT_COPLANAR_MAX_C,
            Suite::Fn => DEFAULT_FN_MAX_C,
            Suite::Normalize => DEFAULT_NORMALIZE_MAX_C,
            Suite::Witness => DEFAULT_WITNESS_MAX_C,
        }
    }

    /// Runs the suite; `max_c` overrides the suite default.
    pub fn run(&self, max_c: Option<i64>, trials: u64, seed: u64) -> VerificationReport {
        let c = max_c.unwrap_or(self.default_max_c());
        match self {
            Suite::White => verify_white(c),
            Suite::Coplanar => verify_coplanarity(c),
            Suite::Fn => verify_fn_properties(c),
            Suite::Normalize => verify_normalization(trials, seed, c),
            Suite::Witness => verify_witness_families(c, c.min(DEFAULT_WITNESS_ORACLE_MAX_C)),
        }
    }
}
