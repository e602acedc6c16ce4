use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use fincat::generate::{random_category, random_presheaf, CategoryShape};
use fincat::karoubi::{idempotents, is_cauchy_complete, karoubi_envelope};
use fincat::sites::{all_sieves, generate_topology, is_sieve, is_topology, pullback_sieve, sieve_generate};
use fincat::{colimit, FinCat};

const SHAPE: CategoryShape = CategoryShape {
    max_objects: 3,
    max_arrows: 8,
    max_carrier: 3,
    terminal: false,
};

fn category(seed: u64) -> FinCat {
    random_category(&mut ChaCha8Rng::seed_from_u64(seed), SHAPE)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn opposite_is_an_involution(seed in any::<u64>()) {
        let c = category(seed);
        prop_assert_eq!(c.opposite().opposite().to_description(), c.to_description());
    }

    #[test]
    fn opposite_swaps_hom_sets(seed in any::<u64>()) {
        let c = category(seed);
        let op = c.opposite();
        for x in 0..c.num_objects() {
            for y in 0..c.num_objects() {
                prop_assert_eq!(c.hom(x, y), op.hom(y, x));
            }
        }
    }

    #[test]
    fn filtered_implies_connected(seed in any::<u64>()) {
        let c = category(seed);
        prop_assert!(!c.is_filtered() || c.is_connected());
    }

    #[test]
    fn terminal_object_makes_filtered(seed in any::<u64>()) {
        let shape = CategoryShape { terminal: true, ..SHAPE };
        let c = random_category(&mut ChaCha8Rng::seed_from_u64(seed), shape);
        prop_assert!(c.is_filtered());
    }

    #[test]
    fn pullback_along_composite(seed in any::<u64>()) {
        let c = category(seed);
        for x in 0..c.num_objects() {
            for s in all_sieves(&c, x) {
                prop_assert!(is_sieve(&c, &s));
                let id = pullback_sieve(&c, &s, c.identity(x)).unwrap();
                prop_assert_eq!(&id, &s);
                for &f in c.arrows_into(x) {
                    let fs = pullback_sieve(&c, &s, f).unwrap();
                    prop_assert_eq!(fs.is_maximal(&c), s.contains(f));
                    for &g in c.arrows_into(c.dom(f)) {
                        let lhs = pullback_sieve(&c, &s, c.comp(f, g)).unwrap();
                        prop_assert_eq!(lhs, pullback_sieve(&c, &fs, g).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn generated_sieves_are_sieves(seed in any::<u64>()) {
        let c = category(seed);
        for x in 0..c.num_objects() {
            let gens: Vec<usize> = c.arrows_into(x).iter().copied().step_by(2).collect();
            let s = sieve_generate(&c, x, &gens).unwrap();
            prop_assert!(is_sieve(&c, &s));
            prop_assert!(gens.iter().all(|&f| s.contains(f)));
        }
    }

    #[test]
    fn generated_topology_is_a_topology(seed in any::<u64>()) {
        let c = category(seed);
        let coverage: Vec<_> = (0..c.num_objects()).filter_map(|x| all_sieves(&c, x).into_iter().nth(1)).collect();
        let t = generate_topology(&c, &coverage).unwrap();
        prop_assert!(is_topology(&c, t.all_covers()));
        for s in &coverage {
            prop_assert!(t.all_covers()[s.codomain].contains(s));
        }
    }

    #[test]
    fn envelope_objects_are_idempotents(seed in any::<u64>()) {
        let c = category(seed);
        let (k, _) = karoubi_envelope(&c).unwrap();
        prop_assert_eq!(k.num_objects(), idempotents(&c).len());
        prop_assert!(is_cauchy_complete(&k));
    }

    #[test]
    fn colimit_classes_partition_elements(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = random_category(&mut rng, SHAPE);
        let f = random_presheaf(&mut rng, &c, 3);
        let q = colimit(&f);
        let total: usize = (0..f.base().num_objects()).map(|x| f.set(x).len()).sum();
        prop_assert_eq!(q.classes().iter().map(Vec::len).sum::<usize>(), total);
        if c.is_connected() && total > 0 && (0..c.num_objects()).all(|x| f.set(x).len() == 1) {
            prop_assert_eq!(q.classes().len(), 1);
        }
    }
}
