mod common;

use common::*;
use horofan::dictionary::{
    classify_variety, decolouration, open_toroidal_subfan, orbit_closure, orbit_table,
};
use horofan::divisors::{class_group, picard_group, prime_divisors};
use horofan::horo::{homogeneous_spaces_isomorphic, validate_coloured_fan, HorosphericalDatum};
use horofan::intlin::{hermite_normal_form, IntMatrix};
use horofan::rootsys::RootDatum;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            let (a, b) = (m[rank][c], m[r][c]);
            for k in 0..cols {
                m[r][k] = m[r][k] * a - m[rank][k] * b;
            }
        }
        rank += 1;
    }
    rank
}

fn points_of(fan: &horofan::horo::ColouredFan) -> Vec<Vec<i64>> {
    prime_divisors(fan)
        .iter()
        .map(|p| {
            p.point(fan.lattice())
                .iter()
                .map(|x| i64::try_from(x).unwrap())
                .collect()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn orbit_table_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (d, fan) = random_fan(&mut rng);
        let table = orbit_table(&fan, &d).unwrap();
        prop_assert_eq!(table.len(), fan.len());
        let open = table.iter().find(|o| o.in_closure_of.len() == 1).unwrap();
        prop_assert!(fan.cones()[open.cone_index].dim() == 0);
        for o in &table {
            prop_assert!(o.in_closure_of.contains(&o.cone_index));
            for &t in &o.in_closure_of {
                prop_assert!(fan.cones()[t].is_coloured_face_of(&fan.cones()[o.cone_index], fan.lattice()));
            }
        }
        let pick = rng.gen_range(0..table.len());
        let (sub, sub_d) = orbit_closure(&fan, table[pick].cone_index, &d).unwrap();
        prop_assert!(validate_coloured_fan(&sub).is_valid());
        prop_assert_eq!(sub.len(), table.iter().filter(|o| o.in_closure_of.contains(&table[pick].cone_index)).count());
        let inner = orbit_table(&sub, &sub_d).unwrap();
        prop_assert_eq!(inner.iter().map(|o| o.dimension).max(), Some(table[pick].dimension));
    }

    #[test]
    fn classification_implications(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (d, fan) = random_fan(&mut rng);
        let r = classify_variety(&fan, &d).unwrap();
        prop_assert!(!r.is_smooth || r.is_factorial);
        prop_assert!(!r.is_factorial || r.is_q_factorial);
        prop_assert!(!r.is_regular || r.is_simplicial);
        prop_assert!(r.is_q_factorial == r.is_simplicial);
        prop_assert!(!r.is_smooth || r.is_regular);
        if r.is_toroidal {
            prop_assert_eq!(r.is_smooth, r.is_regular);
        }
        prop_assert_eq!(r.is_simple, fan.maximal_indices().len() == 1);
        prop_assert_eq!(r.is_affine, r.is_simple && fan.colour_set() == fan.lattice().colour_roots());
        prop_assert!(!r.is_projective || r.is_complete);
    }

    #[test]
    fn class_and_picard_ranks(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (d, fan) = random_fan(&mut rng);
        let points = points_of(&fan);
        let cl = class_group(&fan);
        prop_assert_eq!(cl.group.free_rank, points.len() - rank_i64(&points));
        prop_assert_eq!(cl.left_exact, rank_i64(&points) == fan.lattice().rank());
        for rel in &cl.relations {
            prop_assert!(cl.is_principal(rel));
        }
        let pic = picard_group(&fan);
        prop_assert!(pic.pic.free_rank <= cl.group.free_rank);
        prop_assert!(pic.sequence.ranks_agree);
        let r = classify_variety(&fan, &d).unwrap();
        if r.is_affine {
            prop_assert_eq!(pic.pic.free_rank, 0);
            prop_assert!(pic.pic.torsion.is_empty());
        }
        if r.is_factorial {
            prop_assert_eq!(pic.pic, cl.group);
        }
    }

    #[test]
    fn decolouration_properties(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (_, fan) = random_fan(&mut rng);
        let dec = decolouration(&fan);
        prop_assert!(validate_coloured_fan(&dec).is_valid());
        prop_assert!(dec.colour_set().is_empty());
        prop_assert_eq!(decolouration(&dec), dec.clone());
        prop_assert_eq!(fan.is_complete(), dec.is_complete());
        let open = open_toroidal_subfan(&fan);
        prop_assert!(validate_coloured_fan(&open).is_valid());
        prop_assert!(open.cones().iter().all(|c| c.colours.is_empty()));
        prop_assert!(open.len() <= fan.len());
    }

    #[test]
    fn homogeneous_spaces_match_sublattices(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, e in -3i64..=3, k in -2i64..=2) {
        let g = RootDatum::parse("A2", 0).unwrap();
        prop_assume!(a * e - b * c != 0);
        let m = IntMatrix::from_i64(&[&[a, b], &[c, e]]);
        let d = HorosphericalDatum::new(g.clone(), Default::default(), m.clone()).unwrap();
        let sheared = IntMatrix::from_i64(&[&[a, b + k * a], &[c, e + k * c]]);
        let d2 = HorosphericalDatum::new(g.clone(), Default::default(), sheared).unwrap();
        prop_assert!(homogeneous_spaces_isomorphic(&d, &d2).unwrap());
        let diag = IntMatrix::from_i64(&[&[1, 0], &[0, 2]]);
        let d3 = HorosphericalDatum::new(g, Default::default(), diag.clone()).unwrap();
        let same = hermite_normal_form(&m.transpose()).h == hermite_normal_form(&diag.transpose()).h;
        prop_assert_eq!(homogeneous_spaces_isomorphic(&d, &d3).unwrap(), same);
    }
}

#[test]
fn homogeneous_spaces_with_parabolics() {
    let d1 = datum("A2", 0, &[0], &[&[0], &[1]]);
    let d2 = datum("A2", 0, &[0], &[&[0], &[-1]]);
    let d3 = datum("A2", 0, &[0], &[&[0], &[2]]);
    let d4 = datum("A2", 0, &[1], &[&[1], &[0]]);
    assert!(homogeneous_spaces_isomorphic(&d1, &d2).unwrap());
    assert!(!homogeneous_spaces_isomorphic(&d1, &d3).unwrap());
    assert!(!homogeneous_spaces_isomorphic(&d1, &d4).unwrap());
    assert!(homogeneous_spaces_isomorphic(&full("A1", 1), &full("A1", 1)).unwrap());
}

#[test]
fn complete_fans_are_complete() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..30 {
        let (d, fan) = random_complete_rank2_fan(&mut rng);
        assert!(fan.is_complete());
        let r = classify_variety(&fan, &d).unwrap();
        assert!(
            r.is_complete && r.is_projective,
            "complete rank-2 fans are projective"
        );
    }
}
