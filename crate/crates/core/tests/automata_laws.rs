use phirep::automata::{builtin, phi_tracks, regex_compile, Alphabet, Builtin, Dfa, Nfa};
use phirep::classify::Profile;
use phirep::zeck::{fib_u64, lucas_u64, zeck_encode};

fn all() -> Vec<(Builtin, Dfa)> {
    Builtin::ALL.iter().map(|&b| (b, b.compile())).collect()
}

#[test]
fn de_morgan() {
    let all = all();
    for (a, da) in &all {
        for (b, db) in &all {
            if da.arity() != db.arity() {
                assert!(da.and(db).is_err());
                continue;
            }
            let lhs = da.and(db).unwrap().complement();
            let rhs = da.complement().or(&db.complement()).unwrap();
            assert_eq!(lhs, rhs, "not ({a} and {b})");
            let lhs = da.or(db).unwrap().complement();
            let rhs = da.complement().and(&db.complement()).unwrap();
            assert_eq!(lhs, rhs, "not ({a} or {b})");
            assert_eq!(da.diff(db).unwrap(), da.and(&db.complement()).unwrap(), "{a} - {b}");
        }
    }
}

#[test]
fn complement_and_minimize() {
    for (b, d) in all() {
        assert_eq!(d.complement().complement(), d, "{b}");
        assert_eq!(d.minimize(), d, "{b}");
        assert_eq!(d.minimize().minimize(), d.minimize(), "{b}");
        assert_eq!(Nfa::from(&d).determinize().minimize(), d, "{b}");
        assert_eq!(d.equivalent(&d.complement().complement()).unwrap(), None);
        assert!(d.equivalent(&d.complement()).unwrap().is_some(), "{b}");
    }
}

#[test]
fn shifts_on_zeckendorf_words() {
    let shiftl = builtin("shiftl").unwrap();
    let shiftr = builtin("shiftr").unwrap();
    for x in 0..=10_000u64 {
        let w = zeck_encode(x).to_string();
        let left = format!("{w}0");
        assert!(shiftl.accepts_tracks(&[&w, &left]).unwrap(), "{x}");
        assert!(!shiftl.accepts_tracks(&[&w, &w]).unwrap() || x == 0, "{x}");
        let right = &w[..w.len().saturating_sub(1)];
        assert!(shiftr.accepts_tracks(&[&w, right]).unwrap(), "{x}");
    }
}

#[test]
fn fibonacci_lucas_pairs() {
    let fibluc = builtin("fibluc").unwrap();
    for i in 2..=15usize {
        let f = zeck_encode(fib_u64(i).unwrap()).to_string();
        let l = zeck_encode(lucas_u64(i).unwrap()).to_string();
        assert!(fibluc.accepts_tracks(&[&f, &l]).unwrap(), "i = {i}");
        let wrong = zeck_encode(lucas_u64(i + 1).unwrap()).to_string();
        assert!(!fibluc.accepts_tracks(&[&f, &wrong]).unwrap(), "i = {i}");
    }
}

#[test]
fn smallest_exponent_track_is_largesteven() {
    let largesteven = builtin("largesteven").unwrap();
    for n in 2..=10_000u64 {
        let (_, z) = phi_tracks(n).unwrap();
        assert!(largesteven.accepts_str(&z).unwrap(), "{n}: {z}");
        // the z track's leading 1 is the smallest exponent
        let min = Profile::of(n).unwrap().parity().min_exponent;
        assert_eq!(z.len() as i64, -min, "{n}");
    }
}

#[test]
fn conjunction_reads_positions_from_the_end() {
    let d = builtin("noodd1").unwrap().and(&builtin("oneeven1").unwrap()).unwrap();
    assert!(d.accepts_str("10").unwrap());
    assert!(!d.accepts_str("01").unwrap());
    assert!(d.accepts_str("001000").unwrap());
}

#[test]
fn projection_of_fibmatch() {
    // some y marks a 1 of x: exactly the words with a 1
    let d = builtin("fibmatch").unwrap().project(1).unwrap();
    let expected = regex_compile("0*1(0|1)*", &Alphabet::binary(1)).unwrap();
    assert_eq!(d, expected);
}
