"""Reproduction checks for Kirk's example, shared by ``linktau verify-paper`` and the tests."""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import homology, lmap
from .invariants import (
    DoublePoint,
    Intersection,
    WhitneyDiskData,
    intersection_sum,
    omega_plus,
    phi,
    sigma_pair,
    tau,
)
from .quotient import (
    Distinct,
    Equal,
    QuotientContext,
    Relator,
    are_equal_mod_R,
    enumerate_relator_instances,
    is_zero_mod_R,
)
from .rings import BiLaurent, C2Algebra, Laurent
from .wall import SphereClass, lambda_disc, lambda_sphere, lambda_tilde, r4_data

EXPECTED_SIGMA = "(0, t^2 + -4*t + 3)"
EXPECTED_DISK_PHI = ("1", "t", "0", "t", "t")
EXPECTED_PHI_TAU = "1 + t"
EXPECTED_DISC_LAMBDA = ("t + 1",) * 4 + ("2*t + 2",)


@dataclass
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0
    limit: float | None = None

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        return f"[{self.status}] {self.number}. {self.name}: {self.detail} ({self.seconds:.3f}s)"


@dataclass
class CheckConfig:
    window: int = 10
    kmax: int = 50
    min_relators: int = 30_000
    random_samples: int = 1000
    roundtrip_docs: int = 100
    seed: int = 0
    synthetic_handles: range = field(default_factory=lambda: range(0, 21))


def relation_instances(kmax: int, spheres=(), extra_r4=()) -> Iterator[Relator]:
    """R1-R3 with |k|, |l| <= kmax, then R4 over the Z-basis t^j * A_i (|j|, |k| <= kmax)."""
    rng = range(-kmax, kmax + 1)
    for k in rng:
        yield Relator("R1", k)
    for k in rng:
        for l in rng:
            yield Relator("R2", k, l)
            yield Relator("R3", k, l)
    for s in spheres:
        lam = lambda_sphere(s)
        for j in rng:
            g = lam * Laurent.monomial(1, j)
            for k in rng:
                yield Relator("R4", k, g=g, w2=s.w2)
    for g, w2 in extra_r4:
        for k in rng:
            yield Relator("R4", k, g=g, w2=w2)


def relator_phi(r: Relator) -> C2Algebra:
    return phi(r.expand())


def check_relations(kmax: int, spheres=(), extra_r4=()) -> tuple[int, list[Relator]]:
    """Apply Phi to every enumerated relator; return (count, offenders)."""
    count = 0
    bad = []
    for r in relation_instances(kmax, spheres, extra_r4):
        count += 1
        if relator_phi(r):
            bad.append(r)
    return count, bad


def random_bilaurent(rng: random.Random, terms: int = 6, span: int = 6, coeff: int = 5) -> BiLaurent:
    return BiLaurent(
        ((rng.randint(-span, span), rng.randint(-span, span)), rng.randint(-coeff, coeff))
        for _ in range(rng.randint(0, terms))
    )


def random_document(rng: random.Random) -> lmap.LinkMapDocument:
    def sign():
        return rng.choice((1, -1))

    n_plus = rng.randint(0, 6)
    dp_plus = tuple(DoublePoint(sign(), rng.randint(-4, 4), f"p{i}") for i in range(n_plus))
    dp_minus = tuple(DoublePoint(sign(), rng.randint(-4, 4), f"q{i}") for i in range(rng.randint(0, 6)))
    pairs = []
    for i in range(rng.randint(0, 3) if n_plus else 0):
        a, b = rng.choice(dp_plus).id, rng.choice(dp_plus).id
        pairs.append((f"w{i}", a, b))
    disks = []
    for i in range(rng.randint(0, 4) if pairs else 0):
        xs = tuple(Intersection(sign(), rng.randint(-3, 3)) for _ in range(rng.randint(0, 5)))
        disks.append(
            WhitneyDiskData(f"W{i}", rng.randint(-3, 3), xs, pair=rng.choice(pairs)[0], framed=rng.random() < 0.8)
        )
    spheres = tuple(
        SphereClass.build(
            f"A{i}",
            [(sign(), rng.randint(-3, 3)) for _ in range(rng.randint(0, 4))],
            eps=sign(),
            w2=rng.randint(0, 1),
        )
        for i in range(rng.randint(0, 4))
    )
    header = tuple(f"# note {i}" for i in range(rng.randint(0, 2)))
    return lmap.LinkMapDocument(
        name=rng.choice(["kirk", "random", "example map"]),
        dp_plus=dp_plus,
        dp_minus=dp_minus,
        pairs=tuple(pairs),
        disks=tuple(disks),
        spheres=spheres,
        handles=rng.choice([None, rng.randint(0, 20)]),
        header=header,
    )


def _timed(number: int, name: str, limit: float | None, fn: Callable[[], tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as e:  # a crashing check is a failing check
        ok, detail = False, f"{type(e).__name__}: {e}"
    dt = time.perf_counter() - t0
    if ok and limit is not None and dt > limit:
        ok, detail = False, f"{detail}; took {dt:.3f}s > {limit}s"
    return CheckResult(number, name, ok, detail, dt, limit)


def run_checks(doc: lmap.LinkMapDocument | None = None, cfg: CheckConfig | None = None) -> list[CheckResult]:
    doc = doc if doc is not None else lmap.kirk_example()
    cfg = cfg or CheckConfig()
    results = []

    def sigma_check():
        got = str(sigma_pair(doc.dp_plus, doc.dp_minus))
        return got == EXPECTED_SIGMA, f"sigma = {got}"

    results.append(_timed(1, "sigma invariant", 0.1, sigma_check))

    def phi_tau_check():
        per_disk = tuple(str(phi(intersection_sum(w))) for w in doc.disks)
        total = str(phi(tau(doc.disks)))
        ok = per_disk == EXPECTED_DISK_PHI and total == EXPECTED_PHI_TAU
        return ok, f"Phi(I(W_i)) = ({', '.join(per_disk)}), Phi(tau) = {total}"

    results.append(_timed(2, "Phi(tau) = 1 + t", 0.1, phi_tau_check))

    def nonvanishing_check():
        ctx = QuotientContext(r4_data(doc.spheres), window=cfg.window)
        x = tau(doc.disks)
        cert = is_zero_mod_R(x, ctx)
        ok = isinstance(cert, Distinct) and cert.witness == "Phi" and cert.replay(x, BiLaurent(), ctx)
        return ok, f"window {cfg.window}: {cert.to_text()}"

    results.append(_timed(3, "tau is nonzero modulo the relations", 1.0, nonvanishing_check))

    def omega_check():
        w = omega_plus(doc.disks)
        return w == 1, f"omega_+ = {w}"

    results.append(_timed(4, "omega_+ = 1", None, omega_check))

    def relations_check():
        count, bad = check_relations(cfg.kmax, doc.spheres)
        ok = not bad and count >= cfg.min_relators
        detail = f"{count} relators with |k|,|l| <= {cfg.kmax}, {len(bad)} not killed by Phi"
        if bad:
            detail += f" (first: {bad[0]})"
        return ok, detail

    results.append(_timed(5, "Phi kills every relator", 5.0, relations_check))

    def wall_check():
        disc = tuple(str(lambda_disc(s.pairing)) for s in doc.spheres)
        tilde = tuple(str(lambda_tilde(s)) for s in doc.spheres)
        ok = disc == EXPECTED_DISC_LAMBDA and all(v == "0" for v in tilde) and len(tilde) == 5
        return ok, f"disc values ({', '.join(disc)}), lambda~ ({', '.join(tilde)})"

    results.append(_timed(6, "Wall pairings vanish mod 2", None, wall_check))

    def pi2_check():
        if doc.handles is None:
            return False, "dataset has no handles line"
        kirk = homology.h2_rank(homology.build_universal_cover_complex(doc.handles))
        synthetic = [homology.h2_rank(homology.build_universal_cover_complex(n)) for n in cfg.synthetic_handles]
        ok = kirk == 5 and synthetic == list(cfg.synthetic_handles)
        return ok, f"rank {kirk} for the dataset; ranks 0..{cfg.synthetic_handles[-1]} match n"

    results.append(_timed(7, "pi_2 rank", None, pi2_check))

    def quotient_check():
        rng = random.Random(cfg.seed)
        certs = []
        for k in range(-10, 11):
            x, y = BiLaurent.monomial(1, k, k), BiLaurent.monomial(1, k, 0)
            certs.append((x, y, are_equal_mod_R(x, y, QuotientContext(window=10))))
        for l in range(-10, 11):
            x = BiLaurent.monomial(2, 0, l)
            certs.append((x, BiLaurent(), is_zero_mod_R(x, QuotientContext(window=10))))
        x = BiLaurent.monomial(2, 1, 1)
        certs.append((x, BiLaurent(), is_zero_mod_R(x, QuotientContext(window=10))))
        if not all(isinstance(c, Equal) and c.replay(x, y) for x, y, c in certs):
            return False, "a required identity was not certified"
        for _ in range(cfg.random_samples):
            a, b = random_bilaurent(rng), random_bilaurent(rng)
            if phi(a + b) != phi(a) + phi(b):
                return False, f"Phi not additive on {a} and {b}"
        ctx = QuotientContext(r4_data(doc.spheres), window=6)
        relators = enumerate_relator_instances(ctx)
        consistent = attempts = 0
        while consistent < cfg.random_samples and attempts < 5 * cfg.random_samples:
            attempts += 1
            x = random_bilaurent(rng, span=3)
            y = x
            for _ in range(rng.randint(1, 4)):
                y = y + rng.choice(relators).expand() * rng.randint(-3, 3)
            if y.max_abs_exponent() > ctx.window:
                continue
            cert = are_equal_mod_R(x, y, ctx)
            if not isinstance(cert, Equal) or not cert.replay(x, y) or phi(x) != phi(y):
                return False, f"Phi-consistency failed for {x} vs {y}"
            consistent += 1
        if consistent < cfg.random_samples:
            return False, f"only {consistent} consistency samples"
        return True, (
            f"{len(certs)} identities certified and replayed; "
            f"{cfg.random_samples} additivity and {consistent} Phi-consistency samples"
        )

    results.append(_timed(8, "quotient engine soundness", None, quotient_check))

    def roundtrip_check():
        rng = random.Random(cfg.seed)
        for i in range(cfg.roundtrip_docs):
            d = random_document(rng)
            text = lmap.serialize(d)
            back = lmap.parse(text)
            if back != d or lmap.serialize(back) != text or back.header != d.header:
                return False, f"random document {i} did not round-trip"
        golden = lmap.kirk_text()
        if lmap.serialize(lmap.parse(golden)) != golden:
            return False, "bundled file is not canonical"
        if lmap.parse(lmap.serialize(doc)) != doc:
            return False, "dataset did not round-trip"
        return True, f"{cfg.roundtrip_docs} random documents and the bundled file round-trip byte-exactly"

    results.append(_timed(9, "file format round-trip", None, roundtrip_check))
    return results

