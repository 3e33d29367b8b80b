import itertools

import pytest

from doodlekit.errors import CertificateError, PatternMismatch
from doodlekit.freegroup import mu
from doodlekit.gauss import closure_gauss
from doodlekit.alexander import braid
from doodlekit.markov import (
    Budget,
    Distinct,
    Equivalent,
    Unknown,
    apply_move,
    equivalent_closures,
    format_certificate,
    neighbors,
    parse_certificate,
    verify_certificate,
)
from doodlekit.words import (
    closure_components,
    format_word,
    free_reduce,
    parse_word,
    pi,
    random_word,
)


def w(text, n):
    return parse_word(text, n)


def outcomes(word):
    return {(m.tag, format_word(r), r.strands) for m, r in neighbors(word)}


def tight_budget(u, v, max_states=100_000):
    return Budget(
        max_states,
        max_len=max(len(u), len(v)) + 2,
        max_n=max(u.strands, v.strands),
    )


class TestNeighbors:
    def test_right_stabilizations(self):
        outs = outcomes(w("s1", 2))
        assert ("M2", "s1 s2", 3) in outs
        assert ("M2", "s1 r2", 3) in outs

    def test_braid_rewrite(self):
        assert ("M0", "r2 r1 r2", 3) in outcomes(w("r1 r2 r1", 3))

    def test_right_exchange(self):
        assert ("M4", "s1 r2 r1 r2", 3) in outcomes(w("s1 s2 r1 s2", 3))

    def test_left_exchange(self):
        assert ("M5", "r1 s2 r1 r2", 3) in outcomes(w("s1 s2 s1 r2", 3))

    def test_destab_only_when_sole(self):
        # index 1 occurs twice, so no destabilization from VT_2
        moves = neighbors(w("s1 r1", 2))
        assert not any(m.tag in ("M2", "M3") and m.params[0] == "destab" for m, _ in moves)

    def test_deduplicated(self):
        seen = [format_word(r) + f"@{r.strands}" for _, r in neighbors(w("s1", 2))]
        assert len(seen) == len(set(seen))

    def test_caps_prune(self):
        capped = neighbors(w("s1", 2), Budget(max_len=1, max_n=2))
        assert all(r.strands <= 2 and len(r) <= 1 for _, r in capped)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_every_relation_is_one_move(self, n):
        # each defining relation with distinct sides is a single M0 move,
        # in both directions
        from doodlekit.freegroup import relation_instances

        for family, lhs, rhs in relation_instances(n):
            if lhs == rhs or len(rhs) == 0:
                continue
            assert rhs in {r for m, r in neighbors(lhs) if m.tag == "M0"}, family
            assert lhs in {r for m, r in neighbors(rhs) if m.tag == "M0"}, family

    def test_replay_and_soundness(self, rng):
        m0_checked = 0
        for _ in range(1000):
            n = rng.randint(2, 5)
            word = free_reduce(random_word(rng, n, rng.randint(0, 10)))
            comps = closure_components(word)
            m = mu(word)
            for move, result in neighbors(word):
                assert move.replay()
                assert closure_components(result) == comps
                if move.tag == "M0":
                    assert result.strands == word.strands
                    assert pi(result) == pi(word)
                    assert mu(result) == m
                    m0_checked += 1
                if move.tag in ("M2", "M3"):
                    assert abs(result.strands - word.strands) == 1
        assert m0_checked > 1000


class TestApplyMove:
    def test_pattern_mismatch(self):
        with pytest.raises(PatternMismatch):
            apply_move(w("s1 r1", 2), "M2", ("destab",))

    def test_square_moves(self):
        grown = apply_move(w("s1", 2), "M0", ("square-ins", 0, 1))
        assert format_word(grown) == "s1 s1 s1"
        back = apply_move(grown, "M0", ("square-del", 1))
        assert back == w("s1", 2)


class TestEquivalentClosures:
    def test_one_step_destab(self):
        verdict = equivalent_closures(w("s1", 2), w("", 1))
        assert isinstance(verdict, Equivalent)
        assert [s.tag for s in verdict.trace.steps] == ["M2"]
        assert verdict.trace.steps[0].params == ("destab",)

    def test_distinct_components(self):
        verdict = equivalent_closures(w("", 2), w("", 1))
        assert verdict == Distinct("closure_components", 2, 1)

    def test_equal_words(self):
        verdict = equivalent_closures(w("s1 r2", 3), w("s1 r2", 3))
        assert isinstance(verdict, Equivalent) and verdict.trace.steps == ()

    def test_left_virtual_destabilization(self):
        verdict = equivalent_closures(w("s2 r1", 3), w("s1", 2))
        assert isinstance(verdict, Equivalent)
        assert verdict.trace.replay() and verdict.trace.end == w("s1", 2)

    def test_closures_of_forbidden_pair_are_equivalent(self):
        # the words differ in VT_3 (mu separates them) but their closures
        # are move-equivalent; both sides of the coin in one example
        verdict = equivalent_closures(w("s1 s2 s1", 3), w("s2 s1 s2", 3))
        assert isinstance(verdict, Equivalent) and verdict.trace.replay()

    def test_unknown_on_tiny_budget(self):
        hard = w("r2 r1 s1 r1 s1 r2 r1 s1 r1 s1 r2 r1", 3)
        verdict = equivalent_closures(hard, w("", 1), Budget(5))
        assert isinstance(verdict, Unknown)
        assert verdict.states_explored == 5

    def test_unreduced_inputs_get_boundary_steps(self):
        verdict = equivalent_closures(w("s1 s1", 2), w("r1 r1", 2))
        assert isinstance(verdict, Equivalent)
        assert verdict.trace.replay()
        assert verdict.trace.start == w("s1 s1", 2)
        assert verdict.trace.end == w("r1 r1", 2)
        tags = [s.params[0] for s in verdict.trace.steps if s.tag == "M0"]
        assert "square-del" in tags and "square-ins" in tags

    def test_exhaustion_reports_unknown(self):
        # with n capped at 1 nothing is reachable from the empty word
        verdict = equivalent_closures(w("", 1), w("r1", 2), Budget(1000, 4, 1))
        assert isinstance(verdict, Unknown)

    @pytest.mark.parametrize(
        "a,b",
        [
            ("r1 r2", "r2 r1"),
            ("s1 r2 s1", "s1 s2 s1"),
            ("s1 s2 s1", ""),
        ],
    )
    def test_verdict_symmetry(self, a, b):
        u, v = w(a, 3), w(b, 3)
        one = equivalent_closures(u, v, Budget(20_000))
        two = equivalent_closures(v, u, Budget(20_000))
        assert type(one) is type(two)
        if isinstance(one, Equivalent):
            assert one.trace.replay() and two.trace.replay()
            assert one.trace.start == u and one.trace.end == v
            assert two.trace.start == v and two.trace.end == u

    def test_search_traces_replay(self, rng):
        for _ in range(25):
            n = rng.randint(1, 3)
            word = random_word(rng, n, rng.randint(0, 5))
            target = braid(closure_gauss(word))
            budget = Budget(
                100_000,
                max_len=max(len(word), len(target)) + 4,
                max_n=max(word.strands, target.strands) + 1,
            )
            verdict = equivalent_closures(word, target, budget)
            assert isinstance(verdict, Equivalent)
            assert verdict.trace.replay()

    def test_random_move_chains_recovered(self, rng):
        # pairs constructed by applying random moves must be proved back,
        # exercising trace reversal across cascading cancellations
        for _ in range(120):
            n = rng.randint(2, 4)
            u = free_reduce(random_word(rng, n, rng.randint(0, 8)))
            v = u
            for _ in range(rng.randint(1, 6)):
                options = neighbors(v, Budget(max_len=len(u) + 6, max_n=n + 2))
                if not options:
                    break
                v = rng.choice(options)[1]
            budget = Budget(
                60_000,
                max_len=max(len(u), len(v)) + 4,
                max_n=max(u.strands, v.strands) + 1,
            )
            verdict = equivalent_closures(u, v, budget)
            assert isinstance(verdict, Equivalent), (format_word(u), format_word(v))
            assert verdict.trace.replay()
            assert verdict.trace.start == u and verdict.trace.end == v
            verify_certificate(format_certificate(u, v, verdict.trace))

    def test_deep_cascade_reversal_regression(self):
        # a commutation whose result cancels four letters away needs the
        # square-insertion reversal path
        u = w("r2 r1 r3", 4)
        v = w("r3 s3 r1 s3 r1 s1 r2 r1 s2", 4)
        verdict = equivalent_closures(u, v, Budget(60_000, 13, 5))
        assert isinstance(verdict, Equivalent)
        assert verdict.trace.replay()
        verify_certificate(format_certificate(u, v, verdict.trace))


class TestCertificates:
    def roundtrip(self, u, v):
        verdict = equivalent_closures(u, v)
        assert isinstance(verdict, Equivalent)
        cert = format_certificate(u, v, verdict.trace)
        trace = verify_certificate(cert)
        assert trace.end == v
        return cert

    def test_basic_roundtrip(self):
        self.roundtrip(w("s1", 2), w("", 1))

    def test_longer_roundtrip(self):
        self.roundtrip(w("s2 r1", 3), w("s1", 2))

    def test_tampered_word_rejected(self):
        cert = self.roundtrip(w("s1", 2), w("", 1))
        with pytest.raises(CertificateError):
            verify_certificate(cert.replace("right n=1 :", "right n=2 : s1 r1"))
        with pytest.raises(CertificateError):
            verify_certificate(cert.replace("left n=2 : s1", "left n=2 : s1 r1"))

    def test_tampered_step_rejected(self):
        cert = self.roundtrip(w("s2 r1", 3), w("s1", 2))
        lines = cert.splitlines()
        lines[3], lines[4] = lines[4], lines[3]
        with pytest.raises(CertificateError):
            verify_certificate("\n".join(lines) + "\n")

    def test_parse_headers(self):
        cert = self.roundtrip(w("s1", 2), w("", 1))
        left, right, steps = parse_certificate(cert)
        assert left == w("s1", 2) and right == w("", 1)
        assert len(steps) == 1

    def test_empty_trace_certificate(self):
        verdict = equivalent_closures(w("", 1), w("", 1))
        cert = format_certificate(w("", 1), w("", 1), verdict.trace)
        assert verify_certificate(cert).steps == ()

    @pytest.mark.parametrize(
        "line",
        [
            "step M2 -> s1 @ n=2",              # missing destab/stab field
            "step M1 conj -> s1 @ n=2",         # missing letter
            "step M0 comm-grow 0 -> s1 @ n=2",  # missing wrapped letter
            "step M0 comm-grow 0 s0 -> s1 @ n=2",  # zero index letter
            "step M4 extra -> s1 @ n=2",        # spurious field
        ],
    )
    def test_malformed_step_lines_rejected(self, line):
        cert = f"doodlekit certificate\nleft n=2 : s1\nright n=2 : s1\n{line}\n"
        with pytest.raises(CertificateError):
            verify_certificate(cert)


def small_words(n):
    if n < 2:
        return [""]
    return ["", "s1", "r1"]


def _shift_tokens(text, by=1):
    return " ".join(f"{t[0]}{int(t[1:]) + by}" for t in text.split())


def battery_pairs():
    """Search instances for every derived-move family at n = 2, 3."""
    pairs = []
    for n in (2, 3):
        N = n + 1
        for i in range(1, n + 1):
            # items 1: real stabilization tails, right- and left-handed
            tail = [f"s{j}" for j in range(n, i, -1)]
            tail = tail + [f"s{i}"] + tail[::-1]
            ltail = [f"s{j}" for j in range(1, i)] + [f"s{i}"] + [
                f"s{j}" for j in range(i - 1, 0, -1)
            ]
            for b in small_words(n):
                pairs.append((f"right-tail-real n={n} i={i} b={b!r}",
                              " ".join([b] + tail).strip(), N, b, n))
                pairs.append((f"left-tail-real n={n} i={i} b={b!r}",
                              " ".join([_shift_tokens(b)] + ltail).strip(), N, b, n))
            # items 2/3: exchanges with mixed kinds (all-s rows are item 2)
            m = n + 1 - i  # depth of the mirrored instance
            for ks in itertools.product("sr", repeat=n - i + 1):
                kinds = dict(zip(range(i, n + 1), ks))
                arm = [f"{kinds[j]}{j}" for j in range(n, i - 1, -1)]
                larm = [f"{ks[t]}{t + 1}" for t in range(m)]
                for b1 in small_words(i):
                    for b2 in small_words(n):
                        lhs = arm + [b1] + arm[::-1] + [b2]
                        rhs = [f"r{t[1:]}" for t in arm] + [b1] + [
                            f"r{t[1:]}" for t in arm[::-1]
                        ] + [b2]
                        pairs.append(
                            (f"right-exchange n={n} i={i} ks={ks} b1={b1!r} b2={b2!r}",
                             " ".join(" ".join(lhs).split()), N,
                             " ".join(" ".join(rhs).split()), N)
                        )
                        lb1 = _shift_tokens(b1, by=m)
                        lb2 = _shift_tokens(b2)
                        llhs = larm + [lb1] + larm[::-1] + [lb2]
                        lrhs = [f"r{t[1:]}" for t in larm] + [lb1] + [
                            f"r{t[1:]}" for t in larm[::-1]
                        ] + [lb2]
                        pairs.append(
                            (f"left-exchange n={n} i={m} ks={ks} b1={b1!r} b2={b2!r}",
                             " ".join(" ".join(llhs).split()), N,
                             " ".join(" ".join(lrhs).split()), N)
                        )
        # items 4: mixed-kind stabilization tails
        for c in range(1, n + 1):
            cp = n + 1 - c  # mirrored center
            for ks in itertools.product("sr", repeat=n - c + 1):
                kinds = dict(zip(range(c, n + 1), ks))
                down = [f"{kinds[j]}{j}" for j in range(n, c, -1)]
                pal = down + [f"{kinds[c]}{c}"] + down[::-1]
                lup = [f"{ks[t]}{t + 1}" for t in range(cp - 1)]
                lpal = lup + [f"{ks[cp - 1]}{cp}"] + lup[::-1]
                for b in small_words(n):
                    pairs.append((f"right-tail-mixed n={n} c={c} ks={ks} b={b!r}",
                                  " ".join([b] + pal).strip(), N, b, n))
                    pairs.append((f"left-tail-mixed n={n} c={cp} ks={ks} b={b!r}",
                                  " ".join([_shift_tokens(b)] + lpal).strip(), N, b, n))
    return pairs


_BATTERY = battery_pairs()


@pytest.mark.parametrize(
    "label,lhs,ln,rhs,rn", _BATTERY, ids=[p[0] for p in _BATTERY]
)
def test_derived_move_battery(label, lhs, ln, rhs, rn):
    u, v = w(lhs, ln), w(rhs, rn)
    verdict = equivalent_closures(u, v, tight_budget(u, v))
    assert isinstance(verdict, Equivalent), f"{label}: {verdict}"
    assert verdict.trace.replay()
