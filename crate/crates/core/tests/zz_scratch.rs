use veracity_core::testing::bounded_search;
use veracity_core::{CheckEnv, Claim};
#[test]
fn scratch() {
    let env = CheckEnv::new().with_claims(["A"]);
    let a = Claim::atom("A");
    let lem = Claim::or(a.clone(), Claim::not(a));
    for vars in [&["x","y"][..], &["x","y","z"][..]] {
        for d in 1..=6 {
            let t = std::time::Instant::now();
            let r = bounded_search(&env, &lem, vars, d);
            eprintln!("vars={} d={d} {:?} {:?} found={}", vars.len(), r.per_depth, t.elapsed(), r.proof.is_some());
            if t.elapsed().as_secs() > 20 { break; }
        }
    }
}
