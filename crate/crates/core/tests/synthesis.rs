use num_bigint::BigUint;
use proptest::prelude::*;
use transynth::oracle::{oracle_min, oracle_sat, DEFAULT_CAP};
use transynth::tasks::*;
use transynth::*;

fn cfg() -> SearchConfig {
    SearchConfig::default()
}

fn verdict(engine: Engine, task: &TaskSpec, n: usize) -> bool {
    let out = engine.synthesize_at(task, n, &cfg()).unwrap();
    if let Some(t) = out.witness() {
        assert!(t.verify(task).ok);
    }
    out.is_sat()
}

/// Finds a 0-fixing state bijection mapping `a` onto `b`, by brute force.
fn isomorphic(a: &Transducer, b: &Transducer) -> bool {
    fn perms(rest: Vec<usize>) -> Vec<Vec<usize>> {
        if rest.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for (i, &x) in rest.iter().enumerate() {
            let mut r = rest.clone();
            r.remove(i);
            for mut p in perms(r) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }
    if a.n_states() != b.n_states() {
        return false;
    }
    perms((1..a.n_states()).collect()).into_iter().any(|tail| {
        let mut perm = vec![0];
        perm.extend(tail);
        a.relabel(&perm).unwrap() == *b
    })
}

/// Adds one state nobody can reach.
fn pad(t: &Transducer) -> Transducer {
    let n = t.n_states();
    let k = t.inputs().len();
    let mut delta = t.delta_table().to_vec();
    delta.extend(std::iter::repeat_n(Some(n), k));
    let mut omega = t.omega_table().to_vec();
    omega.push(Some(0));
    Transducer::from_tables(t.inputs().clone(), t.outputs().clone(), delta, omega).unwrap()
}

#[test]
fn parity_minimal_is_two_states() {
    let task = gen_parity(2).unwrap();
    let m = synthesize_minimal(&task, &cfg()).unwrap();
    assert_eq!(m.n_min, 2);
    assert!(m.unsat_trail.is_empty());
    // the textbook machine: 1 toggles, 0 keeps, output = state
    let textbook = Transducer::from_tables(
        task.inputs().clone(),
        task.outputs().clone(),
        vec![Some(0), Some(1), Some(1), Some(0)],
        vec![Some(0), Some(1)],
    )
    .unwrap();
    assert!(isomorphic(&m.transducer, &textbook));
}

#[test]
fn signal_locator_9_3_both_engines() {
    let task = gen_signal_locator(9, 3).unwrap();
    for engine in [Engine::Table, Engine::Trajectory] {
        assert!(!verdict(engine, &task, 3));
        assert!(!verdict(engine, &task, 4));
        assert!(verdict(engine, &task, 5));
    }
}

#[test]
fn signal_locator_9_3_pruned_has_undefined_cells() {
    let task = gen_signal_locator(9, 3).unwrap();
    let m = synthesize_minimal(&task, &cfg()).unwrap();
    let pruned = m.transducer.prune(&task).unwrap();
    let (d, o) = pruned.defined_map_count();
    assert!(d < 10 && o <= 5);
    assert!(pruned.delta_table().iter().any(Option::is_none));
    assert!(pruned.verify(&task).ok);
}

#[test]
fn published_minimal_counts() {
    let cases = [
        (gen_signal_locator(8, 4).unwrap(), 6),
        (gen_zeroes_or_ones_upto(4).unwrap(), 5),
        (gen_palindrome(4).unwrap(), 5),
        (word_classification(), 3),
    ];
    for (task, expected) in cases {
        let m = synthesize_minimal(&task, &cfg()).unwrap();
        assert_eq!(m.n_min, expected);
        let trail: Vec<usize> = m.unsat_trail.iter().map(|u| u.n).collect();
        assert_eq!(trail, (lower_bound(&task)..expected).collect::<Vec<_>>());
    }
}

#[test]
fn exact_length_zeroes_or_ones_needs_four() {
    // a saturating ones counter suffices when every word has length 4
    let task = gen_zeroes_or_ones(4).unwrap();
    assert_eq!(synthesize_minimal(&task, &cfg()).unwrap().n_min, 4);
    assert!(oracle_sat(&task, 3, DEFAULT_CAP).unwrap().is_none());
    assert!(oracle_sat(&task, 4, DEFAULT_CAP).unwrap().is_some());
}

#[test]
fn word_classification_figures() {
    let task = word_classification();
    assert_eq!(lower_bound(&task), 3);
    assert_eq!(variable_count(3, task.inputs().len()), 54);
    assert_eq!(search_space_size(3, 17, 3), BigUint::from(3u32).pow(54));
}

#[test]
fn single_output_task_needs_one_state() {
    let task = TaskSpec::from_char_pairs(&[("0", "r")]).unwrap();
    assert_eq!(lower_bound(&task), 1);
    assert_eq!(synthesize_minimal(&task, &cfg()).unwrap().n_min, 1);
    let two = TaskSpec::from_char_pairs(&[("0", "a"), ("1", "b")]).unwrap();
    assert!(!verdict(Engine::Table, &two, 1));
}

#[test]
fn no_solution_within_max_states() {
    let task = gen_signal_locator(9, 3).unwrap();
    let err = synthesize_minimal(&task, &SearchConfig::with_max_states(4)).unwrap_err();
    assert_eq!(err, Error::NoSolutionWithin(4));
    assert_eq!(err.to_string(), "UNSAT up to 4 states");
}

#[test]
fn budget_is_never_unsat() {
    let task = gen_signal_locator(9, 3).unwrap();
    let cfg = SearchConfig {
        node_budget: Some(100),
        ..cfg()
    };
    for engine in [Engine::Table, Engine::Trajectory] {
        assert!(matches!(
            engine.synthesize_at(&task, 4, &cfg),
            Err(Error::BudgetExhausted { n: 4, .. })
        ));
    }
    let cfg = SearchConfig {
        time_budget: Some(std::time::Duration::ZERO),
        ..cfg
    };
    assert!(matches!(
        synthesize_minimal_with(Engine::Trajectory, &task, &cfg),
        Err(Error::BudgetExhausted { .. })
    ));
}

#[test]
fn trajectory_engine_agrees_on_parity_up_to_relabeling() {
    let task = gen_parity(2).unwrap();
    let table = synthesize_at(&task, 2, &cfg()).unwrap();
    let traj = synthesize_at_traj(&task, 2, &cfg()).unwrap();
    let a = table.witness().unwrap().prune(&task).unwrap();
    let b = traj.witness().unwrap().clone();
    assert!(isomorphic(&a, &b));
}

#[test]
fn trajectory_variable_counts() {
    assert_eq!(trajectory_variable_count(&gen_parity(2).unwrap()), 8);
    assert_eq!(trajectory_variable_count(&gen_signal_locator(9, 3).unwrap()), 81);
    assert_eq!(trajectory_variable_count(&gen_palindrome(5).unwrap()), 160);
}

#[test]
fn word_orders_agree_on_minimum() {
    let task = gen_palindrome(4).unwrap();
    for order in [WordOrder::AsGiven, WordOrder::ShortestFirst, WordOrder::LongestFirst] {
        let cfg = SearchConfig {
            word_order: order,
            ..cfg()
        };
        assert_eq!(synthesize_minimal(&task, &cfg).unwrap().n_min, 5);
    }
}

#[test]
fn determinism() {
    let task = gen_signal_locator(8, 4).unwrap();
    for engine in [Engine::Table, Engine::Trajectory] {
        let a = engine.synthesize_at(&task, 6, &cfg()).unwrap();
        let b = engine.synthesize_at(&task, 6, &cfg()).unwrap();
        assert_eq!(a.result, b.result);
        assert_eq!(a.stats.nodes, b.stats.nodes);
        assert_eq!(a.stats.backtracks, b.stats.backtracks);
    }
}

#[test]
fn monotonicity_by_padding() {
    for task in [gen_parity(2).unwrap(), gen_signal_locator(9, 3).unwrap()] {
        let m = synthesize_minimal(&task, &cfg()).unwrap();
        let padded = pad(&m.transducer);
        assert_eq!(padded.n_states(), m.n_min + 1);
        assert!(padded.verify(&task).ok);
        assert!(verdict(Engine::Table, &task, m.n_min + 1));
    }
}

#[test]
fn oracle_small_task() {
    let task = TaskSpec::from_char_pairs(&[("0", "a"), ("1", "b"), ("00", "b")]).unwrap();
    let expected: Vec<bool> = (1..=3).map(|n| oracle_sat(&task, n, DEFAULT_CAP).unwrap().is_some()).collect();
    // "0" and "00" need different states, "1" shares with "00"
    assert_eq!(expected, [false, true, true]);
    for n in 1..=3 {
        assert_eq!(verdict(Engine::Table, &task, n), expected[n - 1]);
        assert_eq!(verdict(Engine::Trajectory, &task, n), expected[n - 1]);
    }
}

fn tiny_task() -> impl Strategy<Value = TaskSpec> {
    let word = prop::collection::vec(0usize..2, 1..=3);
    let outputs = 1usize..=3;
    (outputs, prop::collection::vec((word, 0usize..3), 1..=4)).prop_map(|(n_out, raw)| {
        let mut pairs: Vec<(Vec<String>, String)> = Vec::new();
        for (w, o) in raw {
            let w: Vec<String> = w.iter().map(|b| b.to_string()).collect();
            if pairs.iter().all(|(x, _)| *x != w) {
                pairs.push((w, ["x", "y", "z"][o % n_out].to_string()));
            }
        }
        TaskSpec::new(
            Alphabet::from_tokens(&["0", "1"]).unwrap(),
            Alphabet::from_tokens(&["x", "y", "z"][..n_out]).unwrap(),
            pairs,
        )
        .unwrap()
    })
}

fn witnesses(task: &TaskSpec) -> Vec<Transducer> {
    let m = synthesize_minimal(task, &cfg()).unwrap();
    let bigger = synthesize_at(task, m.n_min + 1, &cfg()).unwrap();
    vec![m.transducer, bigger.witness().unwrap().clone()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engines_agree_with_oracle(task in tiny_task()) {
        for n in 1..=3 {
            let truth = oracle_sat(&task, n, DEFAULT_CAP).unwrap().is_some();
            prop_assert_eq!(verdict(Engine::Table, &task, n), truth);
            prop_assert_eq!(verdict(Engine::Trajectory, &task, n), truth);
        }
        let n_min = synthesize_minimal(&task, &cfg()).unwrap().n_min;
        prop_assert_eq!(oracle_min(&task, 6, DEFAULT_CAP).unwrap(), n_min);
        prop_assert!(n_min >= lower_bound(&task));
    }

    #[test]
    fn oracle_is_monotone(task in tiny_task()) {
        let mut prev = false;
        for n in 1..=3 {
            let now = oracle_sat(&task, n, DEFAULT_CAP).unwrap().is_some();
            prop_assert!(!prev || now);
            prev = now;
        }
    }

    #[test]
    fn prune_and_totalize_preserve_verification(task in tiny_task()) {
        for t in witnesses(&task) {
            let pruned = t.prune(&task).unwrap();
            prop_assert!(pruned.verify(&task).ok);
            for policy in [FillPolicy::SelfLoop, FillPolicy::Initial, FillPolicy::Constant(1)] {
                prop_assert!(pruned.totalize(policy).verify(&task).ok);
            }
            let mut steps = std::collections::HashSet::new();
            for pair in task.pairs() {
                let states = t.trajectory(&pair.word).unwrap().states;
                for (q, a) in states.iter().zip(&pair.word) {
                    steps.insert((*q, *a));
                }
            }
            prop_assert_eq!(pruned.defined_map_count().0, steps.len());
        }
    }

    #[test]
    fn relabel_preserves_runs(task in tiny_task(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for t in witnesses(&task) {
            let mut tail: Vec<usize> = (1..t.n_states()).collect();
            tail.shuffle(&mut rng);
            let mut perm = vec![0];
            perm.extend(tail);
            let r = t.relabel(&perm).unwrap();
            prop_assert!(r.verify(&task).ok);
            for len in 1..=3usize {
                for bits in 0..1usize << len {
                    let w: Vec<usize> = (0..len).map(|i| (bits >> i) & 1).collect();
                    prop_assert_eq!(r.run(&w).unwrap(), t.run(&w).unwrap());
                }
            }
        }
    }

    #[test]
    fn trajectory_lengths(task in tiny_task()) {
        let t = synthesize_minimal(&task, &cfg()).unwrap().transducer;
        for pair in task.pairs() {
            let traj = t.trajectory(&pair.word).unwrap();
            prop_assert_eq!(traj.states.len(), pair.word.len() + 1);
            prop_assert_eq!(traj.states[0], INITIAL);
            prop_assert_eq!(t.run(&pair.word).unwrap(), t.output(traj.last()).unwrap());
        }
    }
}
