use cdsreg_core::*;
use proptest::prelude::*;

/// Texts over `'a'..'a'+sigma` that are often periodic or nearly so, so that
/// borders and covers actually show up.
fn structured_text() -> impl Strategy<Value = Vec<u8>> {
    (prop::sample::select(vec![1u8, 2, 3, 4, 26]), 1usize..=12)
        .prop_flat_map(|(sigma, base_len)| {
            (
                prop::collection::vec(0..sigma, base_len),
                1usize..=12,
                0usize..=base_len,
                prop::collection::vec((any::<prop::sample::Index>(), 0..sigma), 0..=1),
            )
        })
        .prop_map(|(base, reps, tail, edits)| {
            let mut x: Vec<u8> = base
                .iter()
                .cycle()
                .take(base.len() * reps + tail)
                .map(|&c| b'a' + c)
                .collect();
            for (at, c) in edits {
                let i = at.index(x.len());
                x[i] = b'a' + c;
            }
            x
        })
}

fn random_text() -> impl Strategy<Value = Vec<u8>> {
    prop::sample::select(vec![2u8, 3, 4, 26])
        .prop_flat_map(|sigma| prop::collection::vec((0..sigma).prop_map(|c| b'a' + c), 1..=128))
}

fn any_text() -> impl Strategy<Value = Vec<u8>> {
    prop_oneof![structured_text(), random_text()]
}

fn binary_text() -> impl Strategy<Value = Vec<u8>> {
    prop_oneof![
        prop::collection::vec(prop::sample::select(b"ab".to_vec()), 1..=128),
        (
            prop::collection::vec(prop::sample::select(b"ab".to_vec()), 1..=8),
            1usize..=16
        )
            .prop_map(|(base, reps)| base.repeat(reps)),
    ]
}

/// Marks every position inside every occurrence.
fn covers_by_marking(occ: &[usize], b: usize, m: usize) -> bool {
    let mut marked = vec![false; m];
    for &p in occ {
        for slot in &mut marked[p..p + b] {
            *slot = true;
        }
    }
    marked.iter().all(|&v| v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn duality(x in any_text()) {
        let ba = border_array(&x).unwrap();
        prop_assert_eq!(period_classical(&x).unwrap() + ba.full_border(), x.len());
        prop_assert_eq!(ba.full_border(), naive_longest_border(&x).unwrap());
    }

    #[test]
    fn border_array_structure(x in any_text()) {
        let v = border_array(&x).unwrap();
        let v = v.values();
        prop_assert_eq!(v[0], -1);
        for i in 1..v.len() {
            prop_assert!(v[i] >= 0 && (v[i] as usize) < i);
            prop_assert!(v[i] <= v[i - 1] + 1);
            prop_assert_eq!(v[i] as usize, naive_longest_border(&x[..i]).unwrap());
        }
    }

    #[test]
    fn classical_matches_naive(x in any_text()) {
        prop_assert_eq!(period_classical(&x).unwrap(), naive_period(&x).unwrap());
        prop_assert_eq!(shortest_cover_classical(&x).unwrap(), naive_shortest_cover(&x).unwrap());
    }

    #[test]
    fn shortest_cover_is_superprimitive(x in any_text()) {
        let c = naive_shortest_cover(&x).unwrap();
        prop_assert_eq!(naive_shortest_cover(&x[..c]).unwrap(), c);
    }

    #[test]
    fn chain_elements_are_borders(x in any_text()) {
        let chain = border_chain(&x).unwrap();
        let mut parent = x.len();
        for &l in &chain.lengths {
            prop_assert!(l >= 1 && l < parent);
            prop_assert_eq!(&x[..l], &x[parent - l..parent]);
            parent = l;
        }
    }

    #[test]
    fn covering_matches_marking(x in any_text(), b_seed in any::<prop::sample::Index>()) {
        let m = x.len();
        let b = b_seed.index(m) + 1;
        let occ = occurrences(&x[..b], &x).unwrap();
        prop_assert_eq!(is_covering(&occ, b, m).unwrap(), covers_by_marking(&occ, b, m));
    }

    #[test]
    fn cds_matches_oracles(x in any_text()) {
        let v = build_cds(&x).unwrap();
        prop_assert_eq!(period_cds(&v, &x).unwrap(), naive_period(&x).unwrap());
        prop_assert_eq!(border_cds(&v, &x).unwrap().border, naive_longest_border(&x).unwrap());
        prop_assert_eq!(borders_cds(&v, &x).unwrap(), border_chain(&x).unwrap());
        prop_assert_eq!(shortest_cover_cds(&v, &x).unwrap(), naive_shortest_cover(&x).unwrap());
        for b in 1..=x.len() {
            prop_assert_eq!(
                occurrences_via_cds(&v, &x, b).unwrap(),
                occurrences(&x[..b], &x).unwrap()
            );
        }
    }

    #[test]
    fn cds_border_result_shape(x in any_text()) {
        let v = build_cds(&x).unwrap();
        let r = border_cds(&v, &x).unwrap();
        let m = x.len();
        prop_assert_eq!(r.border == 0, r.sample_border.is_none());
        if let Some(i) = r.sample_border {
            prop_assert_eq!(r.border, m - v.prefix_sums()[v.sample_len() - i - 1]);
            prop_assert_eq!(&x[..r.border], &x[m - r.border..]);
        }
    }

    #[test]
    fn walk_is_bounded(x in any_text()) {
        let v = build_cds(&x).unwrap();
        let (_, steps) = border_cds_traced(&v, &x, Verification::Always).unwrap();
        let verified = steps.iter().filter(|s| s.outcome != WalkOutcome::ShortGap).count();
        prop_assert!(verified <= v.sample_len() + 1);
        prop_assert!(steps.len() <= v.sample_len());
        prop_assert!(steps.windows(2).all(|w| w[0].index > w[1].index));
    }

    #[test]
    fn binary_fast_path_is_sound(x in binary_text()) {
        let v = build_cds(&x).unwrap();
        prop_assert_eq!(
            border_cds_with(&v, &x, Verification::Skip).unwrap(),
            border_cds_with(&v, &x, Verification::Always).unwrap()
        );
    }

    #[test]
    fn binary_round_trip(x in binary_text()) {
        let mut x = x;
        if x[0] == b'b' {
            for c in &mut x {
                *c = if *c == b'a' { b'b' } else { b'a' };
            }
        }
        let v = build_cds(&x).unwrap();
        let y = v.reconstruct_with(b'b');
        prop_assert_eq!(y.as_bytes(), &x[..]);
        let w = build_cds(&y).unwrap();
        prop_assert_eq!(
            (w.positions(), w.distances(), w.k()),
            (v.positions(), v.distances(), v.k())
        );
    }

    /// For a·u·a·b^k the border is |Border(aua)| plus a run of b's at least k long.
    #[test]
    fn tail_lemma(u in prop::collection::vec(prop::sample::select(b"ab".to_vec()), 0..40), k in 0usize..6) {
        let mut aua = vec![b'a'];
        aua.extend(&u);
        aua.push(b'a');
        let mut x = aua.clone();
        x.extend(std::iter::repeat_n(b'b', k));
        let v = build_cds(&x).unwrap();
        let r = border_cds(&v, &x).unwrap();
        prop_assert_eq!(r.border, naive_longest_border(&x).unwrap());
        if r.border > 0 {
            // the border is some border of aua followed by at least k b's
            let head = r.border - k;
            prop_assert!(head >= 1);
            prop_assert_eq!(&aua[..head], &aua[aua.len() - head..]);
            prop_assert!(x[head - 1] == b'a' && x[head..r.border].iter().all(|&c| c == b'b'));
            if head == naive_longest_border(&aua).unwrap() {
                prop_assert_eq!(r.border, head + k);
            }
        }
    }

    #[test]
    fn gen_is_deterministic(sigma in 1usize..=26, len in 1usize..200, seed in any::<u64>()) {
        let spec = GenSpec::new(sigma, len, seed);
        prop_assert_eq!(gen_text(&spec).unwrap(), gen_text(&spec).unwrap());
    }

    #[test]
    fn gen_forced_period(sigma in 1usize..=4, len in 1usize..200, p_seed in any::<prop::sample::Index>(), seed in any::<u64>()) {
        let p = p_seed.index(len) + 1;
        let x = gen_text(&GenSpec::new(sigma, len, seed).with_period(p)).unwrap();
        prop_assert_eq!(x.len(), len);
        for i in 0..len - p {
            prop_assert_eq!(x[i], x[i + p]);
        }
        prop_assert!(naive_period(&x).unwrap() <= p);
    }
}

#[test]
fn load_prefix_is_prefix_of_whole() {
    let f = tempfile::NamedTempFile::new().unwrap();
    let text = gen_text(&GenSpec::new(5, 300, 11)).unwrap();
    std::fs::write(f.path(), text.as_bytes()).unwrap();
    let whole = load_text(f.path(), None).unwrap();
    for k in [1, 2, 17, 299, 300, 301, 10_000] {
        let pre = load_text(f.path(), Some(k)).unwrap();
        assert_eq!(pre.as_bytes(), &whole[..k.min(300)]);
    }
}
