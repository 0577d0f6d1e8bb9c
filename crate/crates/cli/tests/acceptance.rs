//! Acceptance criteria 1 to 18. Each criterion prints one PASS/FAIL line;
//! the test fails if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;

use weaving::run_captured;
use weaving_core::bounds::{constructive_region_set, constructive_unknotting_set, gcd, SMALL_WD_CANDIDATES};
use weaving_core::bracket::{jones_bracket, unlink_value};
use weaving_core::certify::{certify_triviality, Verdict};
use weaving_core::markov::markov_simplify;
use weaving_core::rational::Rational;
use weaving_core::region::{
    square_block_regions, two_round_regions, construct_sym_diff, faces_for_labels, four_round_count, isolate_region_number,
    mod4_construction, rcc_apply, region_unknotting_search, IncidenceSystem, Restriction,
};
use weaving_core::search::permutations;
use weaving_core::warping::{alternating_wd, braid_warping_degree, diagram_warping_count, warping_count, BaseSequence};
use weaving_core::{BraidWord, ClosureDiagram, Limits};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn weave(p: usize, q: usize) -> BraidWord {
    BraidWord::weaving(p, q).unwrap()
}

fn closure(p: usize, q: usize) -> ClosureDiagram {
    ClosureDiagram::close(&weave(p, q)).unwrap()
}

/// Warping crossing points counted directly: walking the strands in the
/// given order, a crossing is first met on the earlier strand, and it is a
/// warping point when that strand passes under.
fn warping_oracle(b: &BraidWord, order: &[usize]) -> usize {
    let mut pos = vec![0; order.len()];
    for (i, &s) in order.iter().enumerate() {
        pos[s] = i;
    }
    b.crossings().iter().filter(|c| pos[c.under] < pos[c.over]).count()
}

fn min_warping_oracle(b: &BraidWord) -> usize {
    permutations(b.strands()).map(|o| warping_oracle(b, &o)).min().unwrap()
}

fn odd_then_even(p: usize) -> Vec<usize> {
    (0..p).step_by(2).chain((1..p).step_by(2)).collect()
}

/// Faces pairwise sharing no crossing, from the corner lists.
fn independent(d: &ClosureDiagram, faces: &[usize]) -> bool {
    let sets: Vec<BTreeSet<usize>> = faces.iter().map(|&f| d.faces()[f].corners.iter().map(|&(c, _)| c).collect()).collect();
    (0..sets.len()).all(|i| (i + 1..sets.len()).all(|j| sets[i].is_disjoint(&sets[j])))
}

/// Crossings touched an odd number of times by the faces' corners.
fn toggle_oracle(d: &ClosureDiagram, faces: &[usize]) -> Vec<usize> {
    let mut count = vec![0usize; d.crossing_count()];
    for &f in faces {
        for &(c, _) in &d.faces()[f].corners {
            count[c] += 1;
        }
    }
    (0..count.len()).filter(|&c| count[c] % 2 == 1).collect()
}

fn c1_warping_example() -> Outcome {
    let b = weave(7, 7);
    let seq = BaseSequence::from_one_based(&[1, 3, 5, 7, 2, 4, 6], 7).unwrap();
    let lib = warping_count(&b, &seq).unwrap().count;
    let oracle = warping_oracle(&b, &odd_then_even(7));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bw77.txt");
    let (_, text) = run_captured(["weaving", "gen", "7", "7"]);
    std::fs::write(&path, text).unwrap();
    let (code, cli) = run_captured(["weaving", "wd", "--file", path.to_str().unwrap(), "--seq", "1,3,5,7,2,4,6"]);
    ensure!(lib == 12 && oracle == 12 && code == 0 && cli == "12\n", "library {lib}, oracle {oracle}, cli {cli:?}");
    Ok("warping count 12 (library, direct count and CLI)".into())
}

fn c2_even_square_blocks() -> Outcome {
    let limits = Limits::default();
    let mut detail = Vec::new();
    for p in [4, 6] {
        let b = weave(p, p);
        let expected = p * (p - 1) / 2;
        for order in permutations(p) {
            let n = warping_count(&b, &BaseSequence::new(order.clone(), p).unwrap()).unwrap().count;
            ensure!(n == expected, "p={p} order {order:?} gives {n}");
        }
        // every pair crosses twice with opposite over strands, so each pair
        // contributes one warping point whatever the order
        for i in 0..p {
            for j in i + 1..p {
                let m = b.mutual_crossings(i, j).unwrap();
                ensure!(m.len() == 2 && m[0].over != m[1].over, "p={p} pair ({i},{j})");
            }
        }
        let d = braid_warping_degree(&b, &limits).unwrap().count;
        ensure!(d == expected, "p={p}: degree {d}");
        detail.push(format!("d(B_W({p},{p})) = {d} over all {} orders", (1..=p).product::<usize>()));
    }
    Ok(detail.join("; "))
}

fn c3_odd_square_blocks() -> Outcome {
    let limits = Limits::default();
    let mut detail = Vec::new();
    for p in [3, 5, 7] {
        let b = weave(p, p);
        let bound = (p * p - 1) / 4;
        let witness = warping_oracle(&b, &odd_then_even(p));
        let d = braid_warping_degree(&b, &limits).unwrap().count;
        ensure!(witness == bound && d <= bound, "p={p}: witness {witness}, degree {d}, bound {bound}");
        if p <= 5 {
            let exhaustive = min_warping_oracle(&b);
            ensure!(exhaustive == d, "p={p}: exhaustive {exhaustive} vs {d}");
            detail.push(format!("p={p} min {exhaustive} <= {bound}"));
        } else {
            detail.push(format!("p={p} min {d} <= {bound}"));
        }
    }
    Ok(detail.join("; "))
}

fn c4_pair_structure() -> Outcome {
    let mut pairs = 0;
    for p in 3..=8 {
        let b = weave(p, p);
        for i in 0..p {
            for j in i + 1..p {
                let m: Vec<_> = b.crossings().into_iter().filter(|c| [c.over, c.under] == [i, j] || [c.over, c.under] == [j, i]).collect();
                ensure!(m.len() == 2, "p={p} ({i},{j}) has {} mutual crossings", m.len());
                let same = m[0].over == m[1].over;
                ensure!(same == (p % 2 == 1), "p={p} ({i},{j}) over strands {} and {}", m[0].over, m[1].over);
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} strand pairs checked"))
}

fn c5_face_census() -> Outcome {
    let mut n = 0;
    for p in 3..=7 {
        for q in 2..=7 {
            let d = closure(p, q);
            let c = d.crossing_count();
            let mut census: BTreeMap<usize, usize> = BTreeMap::new();
            for f in d.faces() {
                *census.entry(f.corners.len()).or_default() += 1;
            }
            let mut expected: BTreeMap<usize, usize> = BTreeMap::new();
            *expected.entry(q).or_default() += 2;
            *expected.entry(3).or_default() += 2 * q;
            if c > 2 * q {
                *expected.entry(4).or_default() += c - 2 * q;
            }
            ensure!(census == expected, "W({p},{q}): census {census:?}, expected {expected:?}");
            let mut shared: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            for e in 0..d.edges().len() {
                let (a, b) = d.edge_faces(e);
                *shared.entry((a.min(b), a.max(b))).or_default() += 1;
            }
            ensure!(shared.values().all(|&k| k <= 1), "W({p},{q}): two faces share more than one edge");
            n += 1;
        }
    }
    Ok(format!("{n} diagrams"))
}

fn c6_warping_table() -> Outcome {
    let table = [((3, 4), 2), ((3, 5), 3), ((3, 7), 4), ((4, 3), 4), ((4, 5), 7), ((5, 2), 2), ((5, 3), 3), ((5, 4), 6)];
    for ((p, q), expected) in table {
        let d = closure(p, q);
        let a = alternating_wd(&d).map_err(|e| format!("W({p},{q}): {e}"))?;
        let rev = ClosureDiagram::close(&weave(p, q).orientation_reversed()).unwrap();
        let brute = |d: &ClosureDiagram| (0..d.edges().len()).map(|e| diagram_warping_count(d, &[e]).unwrap().count).min().unwrap();
        let (down, up) = (brute(&d), brute(&rev));
        ensure!((a.d, a.d_reversed) == (down, up), "W({p},{q}): shortcut {:?} vs all base points {:?}", (a.d, a.d_reversed), (down, up));
        // the table lists the smaller of the two orientations
        ensure!(down.min(up) == expected, "W({p},{q}): d = {down}, reversed {up}, table {expected}");
        ensure!(down + up == d.crossing_count() - 1, "W({p},{q}): orientation sum");
    }
    Ok("8 table entries (min over orientations); d + d_reversed = c - 1".into())
}

fn c7_small_warping_classification() -> Outcome {
    let mut by_md: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for &(p, q) in SMALL_WD_CANDIDATES.iter() {
        let md = alternating_wd(&closure(p, q)).unwrap().min();
        by_md.entry(md).or_default().push((p, q));
    }
    let get = |k: usize| by_md.get(&k).cloned().unwrap_or_default();
    ensure!(SMALL_WD_CANDIDATES.len() == 18, "{} candidates", SMALL_WD_CANDIDATES.len());
    ensure!(get(1) == vec![(3, 2)], "md = 1 on {:?}", get(1));
    let mut two = get(2);
    two.sort();
    ensure!(two == vec![(3, 4), (5, 2)], "md = 2 on {two:?}");
    let mut three = get(3);
    three.sort();
    ensure!(three == vec![(3, 5), (5, 3), (7, 2)], "md = 3 on {three:?}");
    Ok(format!("md classes {:?}", by_md.iter().map(|(k, v)| (*k, v.len())).collect::<Vec<_>>()))
}

fn c8_square_block_regions() -> Outcome {
    for p in [3, 5, 7, 9, 11, 13] {
        let labels = square_block_regions(p).unwrap();
        ensure!(labels.len() == (p * p - 1) / 4, "p={p}: {} regions", labels.len());
        let b = weave(p, p);
        let d = ClosureDiagram::close(&b).unwrap();
        let faces = faces_for_labels(&d, &labels).unwrap();
        let pos: Vec<usize> = {
            let mut pos = vec![0; p];
            for (i, &s) in odd_then_even(p).iter().enumerate() {
                pos[s] = i;
            }
            pos
        };
        let warping: Vec<usize> = b.crossings().iter().filter(|c| pos[c.under] < pos[c.over]).map(|c| c.ordinal).collect();
        ensure!(toggle_oracle(&d, &faces) == warping, "p={p}: toggle image differs from the warping indicator");
    }
    Ok("p = 3..13 odd".into())
}

fn c9_two_round_regions() -> Outcome {
    let limits = Limits::default();
    for p in [5, 7, 9, 11] {
        let d = closure(p, 2);
        let labels = two_round_regions(p).unwrap();
        ensure!(labels.len() == (p - 1) / 2, "p={p}: {} regions", labels.len());
        let after = rcc_apply(&d, &faces_for_labels(&d, &labels).unwrap()).unwrap();
        let cert = certify_triviality(after.word(), &limits).unwrap();
        ensure!(cert.is_trivial(), "p={p}: {}", cert.verdict);
    }
    Ok("W(p,2) unknotted by (p-1)/2 regions for p = 5..11".into())
}

/// Published upper bounds on `u(W(p,q))`.
fn u_formula(p: usize, q: usize) -> Rational {
    let (n, r) = ((q / p) as i64, (q % p) as i64);
    let pi = p as i64;
    if p % 2 == 1 {
        match r {
            1 if n >= 1 => Rational::new(n * (pi * pi - 1), 4),
            2 => Rational::new(n * (pi * pi - 1), 4) + Rational::new(pi - 1, 2),
            _ => Rational::new(n * (pi * pi - 1), 4) + Rational::new((pi - 1) * r, 2) - Rational::integer(1),
        }
    } else {
        assert_eq!(r, 1);
        Rational::new(n * pi * (pi - 1), 2)
    }
}

fn c10_unknotting_witnesses() -> Outcome {
    let limits = Limits::default();
    let mut detail = Vec::new();
    for (p, q) in [(3, 4), (3, 5), (3, 2), (5, 2), (5, 6), (5, 7), (4, 5)] {
        let w = constructive_unknotting_set(p, q, &limits).map_err(|e| format!("W({p},{q}): {e}"))?;
        let expected = u_formula(p, q);
        ensure!(w.formula_value == expected, "W({p},{q}): formula {} vs {expected}", w.formula_value);
        ensure!(Rational::integer(w.witness_size() as i64) == expected, "W({p},{q}): {} flips vs {expected}", w.witness_size());
        let flipped = weave(p, q).with_crossing_changes(&w.witness).unwrap();
        ensure!(flipped == w.word, "W({p},{q}): reported word differs from the flipped braid");
        ensure!(w.certificate.is_trivial(), "W({p},{q}): {}", w.certificate.verdict);
        ensure!(jones_bracket(&flipped, &limits).unwrap() == unlink_value(1), "W({p},{q}): bracket is not the unknot's");
        detail.push(format!("({p},{q})={}", w.witness_size()));
    }
    Ok(detail.join(" "))
}

fn c11_region_witnesses() -> Outcome {
    let limits = Limits::default();
    let mut detail = Vec::new();
    for (p, q) in [(3, 2), (3, 4), (5, 2), (3, 7)] {
        let w = constructive_region_set(p, q, &limits).map_err(|e| format!("W({p},{q}): {e}"))?;
        let expected = u_formula(p, q);
        ensure!(w.formula_value == expected, "W({p},{q}): formula {} vs {expected}", w.formula_value);
        ensure!(Rational::integer(w.witness_size() as i64) == expected, "W({p},{q}): {} regions vs {expected}", w.witness_size());
        let d = closure(p, q);
        let flips = toggle_oracle(&d, &w.witness);
        ensure!(weave(p, q).with_crossing_changes(&flips).unwrap() == w.word, "W({p},{q}): word differs from the region image");
        ensure!(w.certificate.is_trivial(), "W({p},{q}): {}", w.certificate.verdict);
        detail.push(format!("({p},{q})={}", w.witness_size()));
    }
    Ok(detail.join(" "))
}

fn c12_region_unknotting_search() -> Outcome {
    let limits = Limits::default();
    let d = closure(3, 2);
    let nf = d.face_count();
    ensure!(nf == 6, "{nf} faces");
    let ur = region_unknotting_search(&d, &limits).map_err(|e| e.to_string())?;
    ensure!(ur.value == 1 && ur.witness.len() == 1, "u_R = {}", ur.value);
    // the empty set leaves the figure eight, whose bracket is not the unknot's
    ensure!(jones_bracket(d.word(), &limits).unwrap() != unlink_value(1), "figure eight bracket");
    let after = weave(3, 2).with_crossing_changes(&toggle_oracle(&d, &ur.witness)).unwrap();
    ensure!(certify_triviality(&after, &limits).unwrap().is_trivial(), "witness is not certified");
    Ok(format!("u_R = 1 over {} subsets", 1u32 << nf))
}

fn c13_symmetric_difference() -> Outcome {
    for (p, q) in [(4, 8), (6, 12)] {
        let b = weave(p, q);
        let d = ClosureDiagram::close(&b).unwrap();
        let faces = construct_sym_diff(&d).map_err(|e| format!("B_W({p},{q}): {e}"))?;
        let identity: Vec<usize> = (0..p).collect();
        let pos = identity.clone();
        let warping: Vec<usize> = b.crossings().iter().filter(|c| pos[c.under] < pos[c.over]).map(|c| c.ordinal).collect();
        ensure!(toggle_oracle(&d, &faces) == warping, "B_W({p},{q}): image differs");
        ensure!(warping.len() == warping_oracle(&b, &identity), "B_W({p},{q}) count");
    }
    Ok("B_W(4,8) and B_W(6,12)".into())
}

/// Linking matrix from the crossings and the strand cycles.
fn linking_oracle(b: &BraidWord) -> Vec<Vec<i64>> {
    let rho = b.permutation();
    let comp: Vec<usize> = {
        let mut comp = vec![usize::MAX; b.strands()];
        let mut k = 0;
        for s in 0..b.strands() {
            if comp[s] == usize::MAX {
                let mut t = s;
                while comp[t] == usize::MAX {
                    comp[t] = k;
                    t = rho.apply(t);
                }
                k += 1;
            }
        }
        comp
    };
    let k = comp.iter().max().map_or(0, |m| m + 1);
    let mut lk = vec![vec![0i64; k]; k];
    for c in b.crossings() {
        let (a, z) = (comp[c.over], comp[c.under]);
        if a != z {
            lk[a][z] += c.sign.value() as i64;
            lk[z][a] += c.sign.value() as i64;
        }
    }
    lk.iter().map(|row| row.iter().map(|x| x / 2).collect()).collect()
}

fn proper(lk: &[Vec<i64>]) -> bool {
    lk.iter().all(|row| row.iter().sum::<i64>() % 2 == 0)
}

fn c14_linking() -> Outcome {
    let w33 = closure(3, 3);
    let lk33 = linking_oracle(w33.word());
    ensure!(lk33.iter().flatten().all(|&x| x == 0) && w33.linking_matrix() == lk33, "W(3,3) linking {lk33:?}");
    ensure!(w33.is_proper() && proper(&lk33), "W(3,3) not proper");
    let w44 = closure(4, 4);
    let lk44 = linking_oracle(w44.word());
    let unit = (0..4).all(|i| (0..4).all(|j| (i == j) == (lk44[i][j] == 0) && lk44[i][j].abs() <= 1));
    ensure!(unit && w44.linking_matrix() == lk44, "W(4,4) linking {lk44:?}");
    ensure!(!w44.is_proper() && !proper(&lk44), "W(4,4) proper");
    let w48 = closure(4, 8);
    let lk48 = linking_oracle(w48.word());
    ensure!(w48.is_proper() && proper(&lk48) && w48.linking_matrix() == lk48, "W(4,8) not proper");
    let (code, out) = run_captured(["weaving", "lk", "4", "4"]);
    ensure!(code == 0 && out.ends_with("not proper\n"), "cli: {out:?}");
    Ok("W(3,3) proper, W(4,4) not proper, W(4,8) proper".into())
}

/// Isolate-region lower bound, written out case by case.
fn isolate_bound(p: usize, q: usize) -> usize {
    let f = |k: usize| (p + k) / 4;
    match q % 4 {
        0 => (p - 1) * q / 4,
        1 => (p - 1) * (q - 1) / 4,
        2 => (p - 1) * (q - 2) / 4 + f(2),
        _ => (p - 1) * (q - 3) / 4 + f(2) + f(1),
    }
}

fn c15_isolate_regions() -> Outcome {
    let limits = Limits::default();
    let mut knots = 0;
    for p in 3..=5 {
        for q in 2..=7 {
            let d = closure(p, q);
            let iso = isolate_region_number(&d, &limits).map_err(|e| e.to_string())?;
            ensure!(independent(&d, &iso.witness) && iso.witness.len() == iso.number, "W({p},{q}): witness");
            let bound = isolate_bound(p, q);
            ensure!(iso.number >= bound, "W({p},{q}): I = {} < {bound}", iso.number);
            let construction = faces_for_labels(&d, &mod4_construction(p, q)).map_err(|e| e.to_string())?;
            ensure!(construction.len() == bound && independent(&d, &construction), "W({p},{q}): construction");
            if gcd(p, q) == 1 {
                let a = alternating_wd(&d).unwrap();
                let (i, c) = (iso.number, d.crossing_count());
                for x in [a.d, a.d_reversed] {
                    ensure!(i <= x + 1 && x + i <= c, "W({p},{q}): sandwich fails for d = {x}, I = {i}");
                }
                knots += 1;
            }
        }
    }
    Ok(format!("18 diagrams, sandwich on {knots} knots"))
}

fn c16_four_round_count() -> Outcome {
    for p in 3..=50 {
        let f = (p + 2) / 4 + (p + 1) / 4 + p / 4 + (p - 1) / 4;
        ensure!(f == p - 1 && four_round_count(p) == f, "f({p}) = {f}");
    }
    Ok("f(p) = p - 1 for p = 3..50".into())
}

fn words(strands: usize, len: usize) -> Vec<BraidWord> {
    let letters: Vec<i32> = (1..strands as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..len {
        frontier = frontier
            .iter()
            .flat_map(|w: &Vec<i32>| letters.iter().map(move |&l| [w.as_slice(), &[l]].concat()))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out.into_iter().map(|w| BraidWord::from_ints(strands, &w).unwrap()).collect()
}

fn c17_soundness() -> Outcome {
    let limits = Limits::default();

    let mut involutions = 0;
    for p in 2..=5 {
        for q in 1..=5 {
            let d = closure(p, q);
            for f in 0..d.face_count() {
                let g = (f * 7 + 3) % d.face_count();
                let faces: Vec<usize> = if f == g { vec![f] } else { vec![f.min(g), f.max(g)] };
                let twice = rcc_apply(&rcc_apply(&d, &faces).unwrap(), &faces).unwrap();
                ensure!(twice.word() == d.word(), "rcc twice on W({p},{q}) {faces:?}");
                involutions += 1;
            }
        }
    }

    for p in 3..=6 {
        for q in 2..=7 {
            if gcd(p, q) == 1 {
                let n = IncidenceSystem::new(&closure(p, q), Restriction::AllFaces).nullity();
                ensure!(n == 2, "W({p},{q}): nullity {n}");
            }
        }
    }

    let mut sample = words(3, 5);
    sample.extend(words(4, 3));
    for (p, q) in [(3, 4), (3, 6), (4, 4), (5, 3), (7, 2), (4, 3)] {
        sample.push(weave(p, q));
    }
    let mut steps = 0;
    let mut verdicts = [0usize; 3];
    for b in &sample {
        ensure!(b.len() <= 12, "word longer than 12 letters");
        let start = jones_bracket(b, &limits).unwrap();
        for s in markov_simplify(b, 200).trace {
            ensure!(jones_bracket(&s.word, &limits).unwrap() == start, "{b}: {} changes the bracket", s.rule);
            steps += 1;
        }
        let cert = certify_triviality(b, &limits).unwrap();
        let unlink = unlink_value(b.permutation().cycle_count());
        match cert.verdict {
            Verdict::CertifiedTrivial => {
                ensure!(start == unlink, "{b}: certified trivial with a non-unlink bracket");
                verdicts[0] += 1;
            }
            Verdict::CertifiedNontrivial => {
                ensure!(start != unlink, "{b}: certified nontrivial with the unlink bracket");
                verdicts[1] += 1;
            }
            Verdict::Unknown => verdicts[2] += 1,
        }
    }
    Ok(format!(
        "{involutions} rcc involutions; {} words, {steps} Markov steps; verdicts trivial/nontrivial/unknown = {}/{}/{}",
        sample.len(),
        verdicts[0],
        verdicts[1],
        verdicts[2]
    ))
}

fn c18_discrepancy_report() -> Outcome {
    let b = weave(7, 7);
    let computed = min_identity_oracle(&b);
    let (code, out) = run_captured(["weaving", "verify", "7", "7"]);
    ensure!(code == 0, "verify exit {code}");
    let line = out.lines().find(|l| l.starts_with("DISCREPANCY") && l.contains("identity")).ok_or("no discrepancy line")?;
    ensure!(line.contains(&format!("computed {computed}")) && line.contains("published 22"), "{line}");
    ensure!(!out.lines().any(|l| l.starts_with("FAIL")), "verify 7 7 has failing checks");
    Ok(format!("identity order: computed {computed}, published 22"))
}

fn min_identity_oracle(b: &BraidWord) -> usize {
    warping_oracle(b, &(0..b.strands()).collect::<Vec<_>>())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 18] = [
        ("warping count of B_W(7,7), odd-then-even order", c1_warping_example),
        ("even square blocks: sequence independent", c2_even_square_blocks),
        ("odd square blocks: odd-then-even witness", c3_odd_square_blocks),
        ("pairwise crossing structure of B_W(p,p)", c4_pair_structure),
        ("face census and shared edges", c5_face_census),
        ("warping degree table", c6_warping_table),
        ("small minimal warping degrees", c7_small_warping_classification),
        ("square block region set", c8_square_block_regions),
        ("two-round region set", c9_two_round_regions),
        ("unknotting witnesses", c10_unknotting_witnesses),
        ("region unknotting witnesses", c11_region_witnesses),
        ("exhaustive region unknotting number", c12_region_unknotting_search),
        ("symmetric-difference region sets", c13_symmetric_difference),
        ("linking numbers and properness", c14_linking),
        ("isolate-region numbers", c15_isolate_regions),
        ("four-round region count", c16_four_round_count),
        ("soundness properties", c17_soundness),
        ("published discrepancy report", c18_discrepancy_report),
    ];
    // written to the real stdout so the lines show up without --nocapture
    let mut out = std::io::stdout().lock();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let line = match check() {
            Ok(detail) => format!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("criterion {:>2} FAIL  {name}: {why}", i + 1)
            }
        };
        writeln!(out, "{line}").unwrap();
    }
    drop(out);
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
