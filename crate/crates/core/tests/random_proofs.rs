use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use veracity_core::elaborate::canonical_proof;
use veracity_core::semantics::{soundness_check, Verdict};
use veracity_core::testing::{bounded_search, random_instance, recheck};
use veracity_core::{check_sequent, normalize, CheckEnv, Claim};

fn a() -> Claim {
    Claim::atom("A")
}

#[test]
fn search_finds_identity() {
    let env = CheckEnv::new().with_claims(["A"]);
    let goal = Claim::implies(a(), a());
    let r = bounded_search(&env, &goal, &["x", "y"], 2);
    let proof = r.proof.expect("A -> A in two steps");
    assert!(recheck(&env, &proof));
}

#[test]
fn search_finds_double_negated_excluded_middle_at_depth_seven() {
    let env = CheckEnv::new().with_claims(["A"]);
    let lem = Claim::or(a(), Claim::not(a()));
    let goal = Claim::not(Claim::not(lem));
    assert!(bounded_search(&env, &goal, &["x", "y"], 6).proof.is_none());
    let proof = bounded_search(&env, &goal, &["x", "y"], 7).proof.expect("depth seven suffices");
    assert!(recheck(&env, &proof));
}

#[test]
fn no_excluded_middle_up_to_depth_six() {
    let env = CheckEnv::new().with_claims(["A"]);
    let lem = Claim::or(a(), Claim::not(a()));
    let r = bounded_search(&env, &lem, &["x", "y", "z"], 6);
    assert!(r.proof.is_none(), "{:?}", r.proof);
}

#[test]
fn random_proofs_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut holds = 0;
    for _ in 0..200 {
        let inst = random_instance(&mut rng, 4, 2, 12);
        match soundness_check(&inst.tree, &inst.model, &inst.env).unwrap() {
            Verdict::Holds { .. } => holds += 1,
            v => panic!("{v}\n{:#}", inst.tree),
        }
    }
    assert_eq!(holds, 200);
}

#[test]
fn random_proofs_survive_normalization() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let inst = random_instance(&mut rng, 3, 2, 10);
        let j = &inst.conclusion.conclusion;
        let nf = normalize(&j.witness).unwrap().term;
        let tree = canonical_proof(&inst.env, &inst.conclusion.hypotheses, &nf, &j.actor, &j.claim)
            .unwrap_or_else(|e| panic!("{e}\n{:#}", inst.tree));
        let s = check_sequent(&tree, &inst.env).unwrap_or_else(|e| panic!("{e}\n{tree:#}"));
        assert_eq!(s.conclusion.claim, j.claim);
        assert!(s.conclusion.weight >= j.weight, "{} < {}", s.conclusion.weight, j.weight);
        assert!(s.hypotheses.iter().all(|h| inst.conclusion.hypotheses.contains(h)));
    }
}
