//! Acceptance run: one PASS/FAIL line per criterion, each within its time
//! limit. Exits nonzero when any criterion fails.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hermhull::ag::{self, example, residues, subfield_elements};
use hermhull::cyclic::{defining_set_dkl, rains_p_pair, CyclicCode};
use hermhull::grs::{construct_family, enumerate_params, Family, FamilyParams, GrsSpec, RangePolicy};
use hermhull::quantum::tables::{emit_tables, RowStatus};
use hermhull::quantum::{singleton_check, TABLE3_NEW};
use hermhull::report::Verdict;
use hermhull::{Elem, Field, LinearCode, DEFAULT_BUDGET};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: hermhull::Error) -> String {
    e.to_string()
}

/// Full-length GRS_q(b, 1): the hull is GRS_{q-1}(b, 1) with distance q^2 - q + 2.
fn full_length_hull() -> Outcome {
    for q in [3u32, 4, 5] {
        let f = Field::quadratic(q).map_err(err)?;
        let (code, spec, _) =
            construct_family(&f, Family::Con1, FamilyParams::new(q, q as usize), RangePolicy::Strict).map_err(err)?;
        let q = q as usize;
        ensure(spec.a().iter().all(|&a| a == Elem::ONE), || format!("q={q}: a != 1"))?;
        let hull = code.hermitian_hull().map_err(err)?;
        ensure(hull == spec.with_k(q - 1).map_err(err)?.code(), || format!("q={q}: hull is not GRS_(q-1)"))?;
        ensure(hull.k() == q - 1, || format!("q={q}: hull dim {}", hull.k()))?;
        let d = hull.min_distance(DEFAULT_BUDGET).map_err(err)?;
        ensure(d == q * q - q + 2, || format!("q={q}: hull distance {d}"))?;
    }
    Ok(())
}

/// CON2, CON3, CON4: hull dimension k - 1 by Gram rank and intersection,
/// and the hull equals GRS_{k-1} on the same vectors.
fn unenlarged_sweep() -> Outcome {
    for q in [4u32, 5, 7] {
        let f = Field::quadratic(q).map_err(err)?;
        for fam in [Family::Con2, Family::Con3, Family::Con4] {
            for p in enumerate_params(fam, q, RangePolicy::Strict) {
                let (code, spec, _) = construct_family(&f, fam, p, RangePolicy::Strict).map_err(err)?;
                let tag = || format!("q={q} {fam} {p:?}");
                ensure(code.hull_dim_via_gram().map_err(err)? == p.k - 1, || format!("{}: Gram rank", tag()))?;
                let hull = code.hermitian_hull().map_err(err)?;
                ensure(hull.k() == p.k - 1, || format!("{}: intersection", tag()))?;
                ensure(hull == spec.with_k(p.k - 1).map_err(err)?.code(), || format!("{}: hull row space", tag()))?;
            }
        }
    }
    Ok(())
}

/// Enlarged families: Gram rank as claimed, claimed GRS rows inside the hull.
fn enlarged_sweep() -> Outcome {
    let mut failures = Vec::new();
    for q in [5u32, 7] {
        let f = Field::quadratic(q).map_err(err)?;
        for fam in [Family::Con1E, Family::Con2E, Family::Con3E, Family::Con4E] {
            for p in enumerate_params(fam, q, RangePolicy::Strict) {
                let (code, _, claim) = construct_family(&f, fam, p, RangePolicy::Strict).map_err(err)?;
                let rank = code.k() - code.hull_dim_via_gram().map_err(err)?;
                let hull = code.hermitian_hull().map_err(err)?;
                let inside = claim.subcode.code().is_subcode_of(&hull);
                if rank != claim.gram_rank || !inside {
                    failures.push(format!("q={q} {fam} k={} z={:?} f={:?} m={:?}", p.k, p.z, p.f, p.m));
                }
            }
        }
    }
    ensure(failures.is_empty(), || format!("{} instances, first {}", failures.len(), failures[0]))
}

/// Two-point codes from every in-range evaluation set.
fn two_point_sweep() -> Outcome {
    for q in [3u32, 4, 5] {
        let f = Field::quadratic(q).map_err(err)?;
        for r in ag::sweep(&f, DEFAULT_BUDGET).map_err(err)? {
            ensure(r.verdict == Verdict::Pass, || {
                format!("q={q} {:?}: {}", r.construction, r.first_failure.clone().unwrap_or_default())
            })?;
            let k = r.construction.params["k"] as usize;
            ensure(r.code.k == k + 2 && r.code.d_bound == r.code.n - k - 1, || format!("q={q} {:?}", r.construction))?;
        }
    }
    Ok(())
}

/// The worked example over GF(25).
fn worked_example() -> Outcome {
    let a = example::analyze(DEFAULT_BUDGET).map_err(err)?;
    ensure(a.printed_is_construction, || "printed matrix is not the construction's row space".into())?;
    ensure(a.printed_hull_dim == 3 && a.printed_hull_distance == Some(18), || {
        format!("printed hull {} / {:?}", a.printed_hull_dim, a.printed_hull_distance)
    })?;
    ensure(a.residues_match, || {
        let mut logs = a.computed_residues.clone();
        logs.sort();
        logs.dedup();
        format!("printed residue vector not reproduced: computed residues are theta^{logs:?}, none in GF(5)")
    })
}

fn is_norm_coset(f: &Field, pts: &[Elem]) -> bool {
    // prod_{v != u} (u - v) computed directly, all in GF(q)^*
    pts.iter().all(|&u| {
        let d = pts.iter().filter(|&&v| v != u).fold(Elem::ONE, |acc, &v| f.mul(acc, f.sub(u, v)));
        !d.is_zero() && f.in_subfield(d)
    })
}

/// Growth of evaluation sets by Frobenius-conjugate pairs.
fn growth() -> Outcome {
    let f = Field::quadratic(5).map_err(err)?;
    let g = ag::extend_evaluation_set(&f, &subfield_elements(&f).map_err(err)?, 2).map_err(err)?;
    let sizes: Vec<usize> = g.sets.iter().map(Vec::len).collect();
    ensure(sizes == [5, 7, 9], || format!("sizes {sizes:?}"))?;
    ensure(g.pairs.iter().all(|&(a, b)| f.conj(a) == b), || "pair not conjugate".into())?;
    ensure(g.sets.iter().all(|s| is_norm_coset(&f, s)), || "derivative-norm condition".into())?;
    let f7 = Field::quadratic(7).map_err(err)?;
    let g = ag::extend_evaluation_set(&f7, &subfield_elements(&f7).map_err(err)?, 3).map_err(err)?;
    let last = g.sets.last().unwrap();
    ensure(last.len() == 13 && is_norm_coset(&f7, last), || format!("q=7 reached {}", last.len()))
}

fn full_grs(f: &Arc<Field>, k: usize) -> hermhull::Result<LinearCode> {
    let n = f.order() as usize;
    if k == 0 {
        return Ok(LinearCode::zero(f, n));
    }
    let mut b: Vec<Elem> = (0..n as i64 - 1).map(|i| f.alpha_pow(i)).collect();
    b.push(Elem::ZERO);
    Ok(GrsSpec::new(f, b, vec![Elem::ONE; n], k)?.code())
}

/// Rains' code of the pair (GRS_l, GRS_k) against E(D_{k,l}) at q = 3.
fn rains_oracle() -> Outcome {
    let q = 3usize;
    let f = Field::quadratic(q as u32).map_err(err)?;
    let mut bad = Vec::new();
    for k in 1..=3 {
        for l in 0..=k {
            let p = rains_p_pair(&full_grs(&f, l).map_err(err)?, &full_grs(&f, k).map_err(err)?, DEFAULT_BUDGET)
                .map_err(err)?;
            let d = defining_set_dkl(q, k, l).map_err(err)?;
            let ext = CyclicCode::with_field(&f, q * q - 1, &d).map_err(err)?.extended();
            let want = q * q + l * l - 2 * l * k;
            if p != ext || p.k() != want {
                bad.push(format!("(k={k}, l={l}): dim P {} vs E(D) {} vs {want}", p.k(), ext.k()));
            }
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

/// Every new entry of the GF(7) comparison table, at bound equality.
fn quantum_tables() -> Outcome {
    let t = emit_tables(7).map_err(err)?;
    let new: Vec<_> = t.table3.iter().filter(|r| r.status == RowStatus::New).collect();
    for r in &new {
        let c = r.code.ok_or("new row without parameters")?;
        ensure(singleton_check(&c).mds, || format!("{c} is not at bound equality"))?;
    }
    let missing: Vec<String> =
        TABLE3_NEW.iter().filter(|&&e| !new.iter().any(|r| r.code.map(|c| c.tuple()) == Some(e))).map(|e| format!("{e:?}")).collect();
    ensure(missing.is_empty(), || format!("not reproduced: {}", missing.join(", ")))
}

/// Random small codes and evaluation sets.
fn property_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4845_524d);
    let fields: Vec<Arc<Field>> = [2u32, 3, 4, 5].iter().map(|&q| Field::quadratic(q).unwrap()).collect();
    for case in 0..500 {
        let f = &fields[rng.gen_range(0..fields.len())];
        let n = rng.gen_range(1..=10);
        let rows = rng.gen_range(0..=n.min(5));
        let els = f.elements();
        let g: Vec<Vec<Elem>> =
            (0..rows).map(|_| (0..n).map(|_| els[rng.gen_range(0..els.len())]).collect()).collect();
        let c = LinearCode::from_rows(f, n, &g).map_err(err)?;
        let dh = c.hermitian_dual().map_err(err)?;
        let hull = c.hermitian_hull().map_err(err)?;
        let ok = dh.hermitian_dual().map_err(err)? == c
            && c.k() + dh.k() == n
            && hull == dh.hermitian_hull().map_err(err)?
            && hull.k() == c.hull_dim_via_gram().map_err(err)?;
        ensure(ok, || format!("code case {case}"))?;
    }
    for case in 0..200 {
        let f = &fields[rng.gen_range(1..fields.len())];
        let els = f.elements();
        let size = rng.gen_range(2..=els.len().min(20));
        let mut idx: Vec<usize> = (0..els.len()).collect();
        for i in 0..size {
            let j = rng.gen_range(i..idx.len());
            idx.swap(i, j);
        }
        let pts: Vec<Elem> = idx[..size].iter().map(|&i| els[i]).collect();
        ensure(residues(f, &pts).map_err(err)?.residue_sum(f).is_zero(), || format!("residue case {case}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 full-length GRS hull", 30, full_length_hull),
        ("2 CON2-CON4 hull sweep", 120, unenlarged_sweep),
        ("3 enlarged-family sweep", 120, enlarged_sweep),
        ("4 two-point code sweep", 300, two_point_sweep),
        ("5 GF(25) worked example", 60, worked_example),
        ("6 evaluation-set growth", 60, growth),
        ("7 Rains code oracle", 30, rains_oracle),
        ("8 GF(7) quantum tables", 10, quantum_tables),
        ("9 property suite", 120, property_suite),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed <= Duration::from_secs(limit), || format!("took {:.1} s, limit {limit} s", elapsed.as_secs_f64()))
        });
        match outcome {
            Ok(()) => println!("PASS  {name}  ({:.2} s)", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  ({:.2} s): {why}", elapsed.as_secs_f64());
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
