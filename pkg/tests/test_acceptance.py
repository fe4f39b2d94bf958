"""Acceptance criteria, one test group per criterion.

Run ``pytest tests/test_acceptance.py -v``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import io
import itertools
import random
import time
from contextlib import redirect_stdout

import pytest

import helpers
from divlin import bruteforce, cli, generate
from divlin.duality import check_image_perp, check_kernel_perp, family_image, family_kernel
from divlin.factor import (
    factor_image_multi,
    factor_image_subset,
    factor_kernel_multi,
    factor_kernel_subset,
    image_inclusion,
    kernel_inclusion,
)
from divlin.generate import DOMAINS
from divlin.linmap import LinMap, adjoint, image, kernel
from divlin.scalar import GF, HQ, I, J, K, mul
from divlin.space import LEFT, RIGHT, Space, subspace_leq
from divlin.submodule import (
    Side,
    SubmoduleGens,
    idempotent_generators,
    member,
    member_left,
    member_right,
    member_two_sided,
    principal_generator,
    saturate,
)
from divlin.textio import format_matrix, parse_document, parse_matrix

DOMAIN_IDS = ["gf2", "gf3", "gf5", "rat", "quat"]
CHIRALITIES = [RIGHT, LEFT]


# 1 -------------------------------------------------------------------------

_ELAPSED = {}


@pytest.mark.criterion(1, "factorization soundness, 1000 instances per operation per domain")
@pytest.mark.parametrize("dom", DOMAIN_IDS)
def test_c1_soundness(dom):
    start = time.perf_counter()
    failures = helpers.soundness_run(DOMAINS[dom], 1000, seed=f"c1-{dom}")
    _ELAPSED[dom] = time.perf_counter() - start
    assert failures == []


@pytest.mark.criterion(1, "factorization soundness, 1000 instances per operation per domain")
def test_c1_runtime_budget():
    if len(_ELAPSED) < len(DOMAIN_IDS):
        pytest.skip("run together with the soundness tests")
    total = sum(_ELAPSED.values())
    print(f"criterion 1 total runtime {total:.1f} s")
    assert total < 60


# 2 -------------------------------------------------------------------------


def _shapes():
    return itertools.product(CHIRALITIES, range(3), range(3), range(3))


@pytest.mark.criterion(2, "exhaustive GF(2) completeness, dims <= 2")
def test_c2_kernel_completeness():
    F = GF(2)
    disagreements = 0
    for chi, v, w, z in _shapes():
        V, W, Z = Space(F, v, chi), Space(F, w, chi), Space(F, z, chi)
        ss, ts = bruteforce.all_maps(V, W), bruteforce.all_maps(V, Z)
        kernels_t = [bruteforce.kernel_set(t) for t in ts]
        for s in ss:
            ks = bruteforce.kernel_set(s)
            for t, kt in zip(ts, kernels_t):
                res = factor_kernel_subset(s, t)
                if bool(res) != (ks <= kt) or (res and not res.verify()):
                    disagreements += 1
    assert disagreements == 0


@pytest.mark.criterion(2, "exhaustive GF(2) completeness, dims <= 2")
def test_c2_image_completeness():
    F = GF(2)
    disagreements = 0
    for chi, v, w, z in _shapes():
        V, W, Z = Space(F, v, chi), Space(F, w, chi), Space(F, z, chi)
        ss, ts = bruteforce.all_maps(V, W), bruteforce.all_maps(Z, W)
        images_t = [bruteforce.image_set(t) for t in ts]
        for s in ss:
            ims = bruteforce.image_set(s)
            for t, imt in zip(ts, images_t):
                res = factor_image_subset(s, t)
                if bool(res) != (ims <= imt) or (res and not res.verify()):
                    disagreements += 1
    assert disagreements == 0


@pytest.mark.criterion(2, "exhaustive GF(2) completeness, dims <= 2")
def test_c2_full_shape_count():
    # 2x2 over GF(2): 16 maps on each side of every pair
    V = Space(GF(2), 2)
    assert len(bruteforce.all_maps(V, V)) == 16


# 3, 4 ----------------------------------------------------------------------


def _family(domain, rng, height):
    V, W = helpers.spaces(domain, rng, 2)
    fam = [helpers.rand_map(V, W, rng, height) for _ in range(rng.randint(0, 3))]
    return fam, V, W


def _perp_identities(domain, count, seed, height=3):
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        fam, V, W = _family(domain, rng, height)
        if not (check_image_perp(fam, V, W) and check_kernel_perp(fam, V, W)):
            bad += 1
    return bad


@pytest.mark.criterion(3, "annihilator identities for finite families")
@pytest.mark.parametrize("dom", DOMAIN_IDS)
def test_c3_perp_identities(dom):
    assert _perp_identities(DOMAINS[dom], 500, f"c3-{dom}") == 0


def _three_way(domain, count, seed, height=3):
    """Count instances where the three predicates of either chain disagree."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        gens, t = helpers.kernel_family(domain, rng, height)
        V = t.domain
        by_kernel = kernel_inclusion(gens, t)
        by_adjoint = subspace_leq(image(adjoint(t)), family_image([adjoint(g) for g in gens], V.dual()))
        by_witness = bool(factor_kernel_multi(gens, t))
        bad += len({by_kernel, by_adjoint, by_witness}) != 1

        s, gens = helpers.image_family(domain, rng, height)
        W = s.codomain
        by_image = image_inclusion(s, gens)
        by_adjoint = subspace_leq(family_kernel([adjoint(g) for g in gens], W.dual()), kernel(adjoint(s)))
        by_witness = bool(factor_image_multi(s, gens))
        bad += len({by_image, by_adjoint, by_witness}) != 1
    return bad


@pytest.mark.criterion(4, "kernel / adjoint-image / witness equivalence")
@pytest.mark.parametrize("dom", DOMAIN_IDS)
def test_c4_three_way(dom):
    assert _three_way(DOMAINS[dom], 500, f"c4-{dom}") == 0


# 5 -------------------------------------------------------------------------


def _gen_lists(maps):
    yield []
    for k in (1, 2):
        yield from (list(c) for c in itertools.combinations_with_replacement(maps, k))


@pytest.mark.criterion(5, "one-sided membership vs closure oracle over GF(2)^2")
@pytest.mark.parametrize("chi", CHIRALITIES, ids=str)
@pytest.mark.parametrize("side", ["right", "left"])
def test_c5_membership_oracle(side, chi):
    V = Space(GF(2), 2, chi)
    maps = bruteforce.all_maps(V, V)
    decide = member_right if side == "right" else member_left
    checked = disagreements = unsound = 0
    for gens in _gen_lists(maps):
        closure = bruteforce.closure(gens, side, V, V)
        g = SubmoduleGens.of(side, gens, V, V)
        for t in maps:
            res = decide(g, t)
            checked += 1
            if bool(res) != (bruteforce.key(t) in closure):
                disagreements += 1
            if res and not res.verify():
                unsound += 1
    assert checked == 153 * 16
    assert disagreements == 0 and unsound == 0


# 6 -------------------------------------------------------------------------


@pytest.mark.criterion(6, "principal generators over GF(3)^2, 100 probes each")
@pytest.mark.parametrize("side", ["right", "left"])
def test_c6_principal(side):
    F = GF(3)
    V = Space(F, 2)
    rng = random.Random(f"c6-{side}")
    maps = bruteforce.all_maps(V, V)
    for _ in range(200):
        gens = SubmoduleGens.of(side, [rng.choice(maps) for _ in range(rng.randint(0, 3))], V, V)
        t0 = principal_generator(gens)
        assert t0, "square case must always succeed"
        single = SubmoduleGens.of(side, [t0])
        for _ in range(100):
            t = rng.choice(maps)
            assert bool(member(gens, t)) == bool(member(single, t))


# 7 -------------------------------------------------------------------------


@pytest.mark.criterion(7, "idempotent generators")
@pytest.mark.parametrize("side", ["right", "left", "two-sided"])
def test_c7_idempotents(side):
    rng = random.Random(f"c7-{side}")
    for case in range(200):
        domain = DOMAINS[DOMAIN_IDS[case % len(DOMAIN_IDS)]]
        V = Space(domain, rng.randint(0, 4), rng.choice(CHIRALITIES))
        gens = SubmoduleGens.of(side, [helpers.rand_map(V, V, rng) for _ in range(rng.randint(0, 3))], V, V)
        es = idempotent_generators(gens)
        for e in es:
            assert e @ e == e
        assert saturate(SubmoduleGens.of(side, es, V, V)) == saturate(gens)


# 8 -------------------------------------------------------------------------


@pytest.mark.criterion(8, "two-sided ideals of L(GF(2)^2) are trivial")
@pytest.mark.parametrize("chi", CHIRALITIES, ids=str)
def test_c8_two_sided(chi):
    V = Space(GF(2), 2, chi)
    maps = bruteforce.all_maps(V, V)
    nonzero = [g for g in maps if not g.is_zero()]
    assert len(nonzero) == 15
    for g in nonzero:
        assert len(bruteforce.closure([g], "two-sided", V, V)) == 16
        gens = SubmoduleGens.of(Side.TWO_SIDED, [g])
        for t in maps:
            res = member_two_sided(gens, t)
            assert res and res.verify()


# 9 -------------------------------------------------------------------------


@pytest.mark.criterion(9, "noncommutative coverage over H(Q), height <= 8")
def test_c9_soundness_quaternions():
    assert helpers.soundness_run(HQ, 1000, seed="c9", height=8) == []


@pytest.mark.criterion(9, "noncommutative coverage over H(Q), height <= 8")
def test_c9_perp_quaternions():
    assert _perp_identities(HQ, 500, "c9-perp", height=8) == 0


@pytest.mark.criterion(9, "noncommutative coverage over H(Q), height <= 8")
def test_c9_three_way_quaternions():
    assert _three_way(HQ, 500, "c9-3way", height=8) == 0


@pytest.mark.criterion(9, "noncommutative coverage over H(Q), height <= 8")
def test_c9_regressions():
    assert mul(I, J) != mul(J, I)
    assert mul(I, J) == K
    s = LinMap.from_rows(HQ, [[J]])
    t = LinMap.from_rows(HQ, [[I]])
    res = factor_kernel_subset(s, t)
    assert res["P"].matrix == ((-K,),)
    assert res.verify()


# 10 ------------------------------------------------------------------------


@pytest.mark.criterion(10, "CLI round trip and exit codes")
@pytest.mark.parametrize("dom", DOMAIN_IDS)
def test_c10_round_trip(dom):
    domain = DOMAINS[dom]
    rng = random.Random(f"c10-{dom}")
    for _ in range(100):
        V, W = helpers.spaces(domain, rng, 2)
        if rng.random() < 0.5:
            t = helpers.rand_map(V, W, rng, height=8)
        else:
            t = generate.linmap(V, W, rng, height=8)
        text = format_matrix(t)
        again = parse_matrix(text)
        assert again == t
        assert format_matrix(again) == text


def _run(args):
    buf = io.StringIO()
    with redirect_stdout(buf):
        status = cli.main(args)
    return status, buf.getvalue()


def _write(tmp_path, name, rows, domain="gf 2", chirality="right", shape=None):
    nrows, ncols = shape or (len(rows), len(rows[0]))
    body = "".join(" ".join(str(x) for x in r) + "\n" for r in rows)
    path = tmp_path / name
    path.write_text(f"scalar {domain}\n{chirality}\n{nrows} {ncols}\n{body}")
    return str(path)


@pytest.mark.criterion(10, "CLI round trip and exit codes")
def test_c10_exit_codes_factor(tmp_path):
    s = _write(tmp_path, "s.mat", [[1, 0], [0, 0]])
    t = _write(tmp_path, "t.mat", [[1, 0], [1, 0]])
    status, out = _run(["factor-kernel", s, t])
    assert status == 0
    blocks = dict(parse_document(out))
    assert blocks["P"].matrix == parse_matrix("scalar gf 2\nright\n2 2\n1 0\n1 0\n").matrix

    status, out = _run(["factor-kernel", "--equal", s, t])
    assert status == 0

    # image side: s = [[1],[1]], t = [[1,0],[1,0]] gives P = [[1],[0]]
    s1 = _write(tmp_path, "s1.mat", [[1], [1]])
    status, out = _run(["factor-image", s1, t])
    assert status == 0 and dict(parse_document(out))["P"].matrix == LinMap.from_rows(GF(2), [[1], [0]]).matrix

    # kernel not contained: s = identity, t = anything nonzero with a kernel
    ident = _write(tmp_path, "id.mat", [[1, 0], [0, 1]])
    status, out = _run(["factor-kernel", t, ident])
    assert status == 1 and "[CERT]" in out

    q = _write(tmp_path, "q.mat", [[2, 0], [0, 0]], domain="rat")
    r = _write(tmp_path, "r.mat", [[0, 1], [1, 0]], domain="rat")
    status, out = _run(["factor-rank", q, r])
    assert status == 0
    status, out = _run(["factor-rank", r, q])
    assert status == 1

    hs = _write(tmp_path, "hs.mat", [["j"]], domain="quat")
    ht = _write(tmp_path, "ht.mat", [["i"]], domain="quat")
    status, out = _run(["factor-kernel", hs, ht])
    assert status == 0 and dict(parse_document(out))["P"].matrix == ((-K,),)


@pytest.mark.criterion(10, "CLI round trip and exit codes")
def test_c10_exit_codes_submodule(tmp_path):
    g = _write(tmp_path, "g.mat", [[1, 0], [0, 0]])
    good = _write(tmp_path, "good.mat", [[0, 1], [0, 0]])
    bad = _write(tmp_path, "bad.mat", [[0, 0], [1, 0]])
    status, out = _run(["member", "--side", "right", good, g])
    assert status == 0
    status, out = _run(["member", "--side", "right", bad, g])
    assert status == 1
    cert = dict(parse_document(out))["CERT"]
    assert cert.images() == [(GF(2)(0), GF(2)(1))]

    t = _write(tmp_path, "t.mat", [[1, 0], [1, 0]])
    ident = _write(tmp_path, "id.mat", [[1, 0], [0, 1]])
    assert _run(["member", "--side", "left", t, g])[0] == 0
    assert _run(["member", "--side", "left", ident, g])[0] == 1
    assert _run(["member", "--side", "two-sided", ident, g])[0] == 0
    zero = _write(tmp_path, "zero.mat", [[0, 0], [0, 0]])
    assert _run(["member", "--side", "two-sided", ident, zero])[0] == 1

    status, out = _run(["rank", zero])
    assert status == 0 and out == "0\n"


@pytest.mark.criterion(10, "CLI round trip and exit codes")
def test_c10_exit_code_usage(tmp_path, capsys):
    notprime = _write(tmp_path, "np.mat", [[1]], domain="gf 4")
    assert _run(["rank", notprime])[0] == 2
    garbage = tmp_path / "garbage.mat"
    garbage.write_text("scalar rat\nright\n1 1\n1/x\n")
    assert _run(["rank", str(garbage)])[0] == 2
    assert "line 4, column 1" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2
