//! Enumeration checked against oracles that do not share its code paths:
//! naive scans over all 2x2 matrices, the order formula, and orbit sizes
//! recomputed from stabilizers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spinvol::enumerate::*;
use spinvol::involution::*;
use spinvol::{FieldCtx, Mat};

/// All `[[a, b], [c, d]]` over `F_p` with determinant 1.
fn naive_sl2(p: i64) -> Vec<[i64; 4]> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    if (a * d - b * c).rem_euclid(p) == 1 {
                        out.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    out
}

#[test]
fn sp2_matches_naive_scan() {
    for p in [3u64, 5, 7] {
        let g = enumerate_group(1, p).unwrap();
        let naive = naive_sl2(p as i64);
        assert_eq!(g.order(), naive.len());
        let ctx = g.ctx().clone();
        for m in &naive {
            let mat = Mat::from_ints(&ctx, &[&m[..2], &m[2..]]);
            assert!(g.contains(&mat));
        }
        // A^2 = -I in SL(2) means trace 0.
        let traceless = naive
            .iter()
            .filter(|m| (m[0] + m[3]) % p as i64 == 0)
            .count();
        let set = enumerate_involutions(&g, None).unwrap();
        assert_eq!(set.len(), traceless);
    }
}

#[test]
fn orders_follow_formula() {
    assert_eq!(group_order(1, 3), 24);
    assert_eq!(group_order(2, 3), 51840);
    assert_eq!(enumerate_group(2, 3).unwrap().order(), 51840);
}

/// `|orbit of A under conjugation and sign| = 2|G| / #{(g, e) : g^-1 A g = e A}`.
fn orbit_size_from_stabilizer(group: &GroupEnumeration, a: &Mat) -> usize {
    let neg = a.neg();
    let mut stab = 0;
    for i in 0..group.order() {
        let g = group.element(i).with_ctx(a.ctx());
        let ga = g.mul(a);
        let ag = a.mul(&g);
        if ga == ag {
            stab += 1;
        }
        if ga == neg.mul(&g) {
            stab += 1;
        }
    }
    2 * group.order() / stab
}

fn check_partition(n: usize, p: u64, alpha: Option<i64>) -> Partition {
    let group = enumerate_group(n, p).unwrap();
    let alpha = alpha.map(|a| group.ctx().int(a));
    let set = enumerate_involutions(&group, alpha.as_ref()).unwrap();
    let part = partition_classes(&set, &group).unwrap();
    let total: usize = part.table.classes.iter().map(|c| c.size).sum();
    assert_eq!(total, set.len());
    for c in &part.table.classes {
        assert_eq!(orbit_size_from_stabilizer(&group, &c.witness), c.size);
        assert_eq!(classify(&c.witness).unwrap().inv_type, c.inv_type);
    }
    assert!(part.invariants_complete);
    part
}

#[test]
fn sp2_f3_classes() {
    let plain = check_partition(1, 3, None);
    assert_eq!(
        plain.table.counts,
        [
            ClassCount::Exact(0),
            ClassCount::Exact(0),
            ClassCount::Exact(1),
            ClassCount::Exact(0)
        ]
    );
    assert_eq!(plain.table.classes[0].size, 6);
    let coset = check_partition(1, 3, Some(2));
    assert_eq!(coset.table.get(InvType::T4), ClassCount::Exact(1));
    assert_eq!(coset.table.get(InvType::T2), ClassCount::Exact(0));
}

#[test]
fn sp2_f5_and_f7_classes() {
    for (p, nu) in [(5, 2), (7, 3)] {
        let plain = check_partition(1, p, None);
        assert_eq!(plain.table.get(InvType::T3), ClassCount::Exact(1));
        let coset = check_partition(1, p, Some(nu));
        assert_eq!(coset.table.get(InvType::T4), ClassCount::Exact(1));
    }
}

#[test]
fn sp4_f3_classes() {
    let plain = check_partition(2, 3, None);
    assert_eq!(plain.table.get(InvType::T1), ClassCount::Exact(1));
    assert_eq!(plain.table.get(InvType::T3), ClassCount::Exact(1));
    let t1: Vec<_> = plain
        .table
        .classes
        .iter()
        .filter(|c| c.inv_type == InvType::T1)
        .collect();
    assert_eq!(t1[0].dim_pair, Some((2, 2)));
    // centralizer Sp(2,3) x Sp(2,3) of order 576
    assert_eq!(t1[0].size, 51840 / 576);
    let coset = check_partition(2, 3, Some(2));
    assert_eq!(coset.table.get(InvType::T2), ClassCount::Exact(1));
    assert_eq!(coset.table.get(InvType::T4), ClassCount::Exact(1));
}

#[test]
fn verify_counts_small_cases() {
    for (n, p) in [(1, 3), (1, 5), (1, 7), (2, 3)] {
        let r = verify_counts(n, p).unwrap();
        assert!(r.all_hold(), "n={n} p={p}");
        assert!(r.invariants_complete);
        assert!(r
            .rows
            .iter()
            .all(|row| row.status != FormulaStatus::BoundOnly));
    }
}

#[test]
fn decision_agrees_with_orbits_sp2_f5() {
    let group = enumerate_group(1, 5).unwrap();
    let ctx: FieldCtx = group.ctx().clone();
    let mut mats = Vec::new();
    let mut orbit = Vec::new();
    for (tag, alpha) in [(0, None), (1000, Some(ctx.int(2)))] {
        let set = enumerate_involutions(&group, alpha.as_ref()).unwrap();
        let part = partition_classes(&set, &group).unwrap();
        mats.extend(set.matrices());
        orbit.extend(part.orbit_of.iter().map(|o| o + tag));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let i = rng.gen_range(0..mats.len());
        let j = rng.gen_range(0..mats.len());
        let d = decide_isomorphic(&mats[i], &mats[j]).unwrap();
        assert_eq!(d.isomorphic, orbit[i] == orbit[j]);
        if d.isomorphic {
            assert!(d.conjugator.is_some());
        }
    }
}

#[test]
fn size_guard() {
    assert!(matches!(
        enumerate_group(3, 3),
        Err(spinvol::Error::TooLarge { .. })
    ));
    assert!(matches!(
        enumerate_group(2, 5),
        Err(spinvol::Error::TooLarge { .. })
    ));
}
