"""Statistic-preserving reduction bijections and canonical-form pipelines.

Each elementary move rewrites one side of a separated pair (every entry of
``sigma`` above every entry of ``pi``) and acts on a single interleaving:

* ``theta_des`` moves a descent of the sigma side one position left,
  preserving the descent count and lowering the major index by one.
* ``theta_maj_first`` kills a descent at position 1 of the sigma side by
  conjugating ``theta_des`` with a prepended new maximum.
* ``theta_pk`` moves an interior peak of the pi side one position left,
  preserving the peak count of every interleaving.
* ``theta_lpk`` handles the peak-at-position-2 case by conjugating
  ``theta_pk`` with a prepended low sentinel.
* right-peak moves run the inverse of the interior move on an
  appended-sentinel framing, shifting peaks right instead of left.

``canonicalize`` iterates the appropriate move with a strictly decreasing
measure until the rewritten side reaches its canonical profile, recording
a trace that ``apply_trace`` replays on any interleaving of the starting
pair as a statistic-preserving bijection.
"""

from __future__ import annotations

from .errors import NotAShuffleError
from .perm import (
    Perm,
    perm_with_descent_set,
    perm_with_left_peak_profile,
    space_labels,
)
from .shuffle import is_shuffle, phi, phi_tilde, t_swap
from .stats import (
    StatId,
    chi_minus,
    chi_plus,
    des_set,
    maj,
    peak_family,
    validate_stat,
)
from .traces import ReductionStep, ReductionTrace

SIGMA_SIDE_STATS = ("des", ("maj", "des"), "maj")
PI_SIDE_STATS = ("pk", "lpk", "rpk", "epk", "udr", ("udr", "pk"))
SUPPORTED_STATS = SIGMA_SIDE_STATS + PI_SIDE_STATS


def _require_separated(pi: Perm, sigma: Perm) -> None:
    if pi and sigma and max(pi) >= min(sigma):
        raise ValueError(f"every entry of {sigma} must exceed every entry of {pi}")


def _require_shuffle(tau: Perm, pi: Perm, sigma: Perm) -> None:
    if not is_shuffle(tau, pi, sigma):
        raise NotAShuffleError(f"{tau} is not a shuffle of {pi} and {sigma}")


# ---------------------------------------------------------------------------
# descent-side moves


def theta_des(tau: Perm, pi: Perm, sigma: Perm, i: int, sigma_new: Perm) -> Perm:
    """Move the descent of ``sigma`` at an interior peak position ``i`` one
    step left, rewriting ``tau`` accordingly.

    The entry sigma_i is the only sigma entry strictly between sigma_{i-1}
    and sigma_{i+1} in ``tau``; it is removed from the block of pi entries
    around it and reinserted one labeled space lower (cyclically), after
    which the sigma entries are renamed to ``sigma_new``.  The image keeps
    the descent count and has major index exactly one lower.
    """
    _require_separated(pi, sigma)
    _require_separated(pi, sigma_new)
    n = len(sigma)
    if not 2 <= i <= n - 1:
        raise ValueError(f"index {i} has no neighbors on both sides")
    if not (sigma[i - 2] < sigma[i - 1] > sigma[i]):
        raise ValueError(f"{i} is not an interior peak of {sigma}")
    want = (des_set(sigma) - {i}) | {i - 1}
    if des_set(sigma_new) != want or len(sigma_new) != n:
        raise ValueError(
            f"replacement must have descent set {sorted(want)}, got {sigma_new}"
        )
    _require_shuffle(tau, pi, sigma)

    prev_v, peak_v, next_v = sigma[i - 2], sigma[i - 1], sigma[i]
    pa = tau.index(prev_v)
    pc = tau.index(next_v)
    block = tau[pa + 1 : pc]
    r = block.index(peak_v)
    delta = block[:r] + block[r + 1 :]
    if delta:
        labels = space_labels(delta)
        x_new = (labels[r] - 1) % (len(delta) + 1)
        r_new = labels.index(x_new)
        new_block = delta[:r_new] + (peak_v,) + delta[r_new:]
    else:
        new_block = (peak_v,)
    rearranged = tau[: pa + 1] + new_block + tau[pc:]
    return phi_tilde(rearranged, pi, sigma, sigma_new)


def theta_maj_first(tau: Perm, pi: Perm, sigma: Perm, sigma_new: Perm) -> Perm:
    """Remove a descent at position 1 of ``sigma``, lowering the major
    index of ``tau`` by one.

    Prepends a new maximum to the sigma side, which turns the front
    descent into an interior peak at position 2, applies
    :func:`theta_des` there, and strips the prepended entry.  Requires the
    standard separated domains [m] and [n]+m.
    """
    m, n = len(pi), len(sigma)
    if set(pi) != set(range(1, m + 1)) or set(sigma) != set(range(m + 1, m + n + 1)):
        raise ValueError("operands must live on the standard separated domains")
    if n < 2 or not sigma[0] > sigma[1]:
        raise ValueError(f"{sigma} has no descent at position 1")
    want = des_set(sigma) - {1}
    if des_set(sigma_new) != want or set(sigma_new) != set(sigma):
        raise ValueError(
            f"replacement must have descent set {sorted(want)}, got {sigma_new}"
        )
    _require_shuffle(tau, pi, sigma)

    sset = set(sigma)
    sigma_lift = (m + 1,) + tuple(v + 1 for v in sigma)
    sigma_lift_new = (m + n + 1,) + sigma_new
    tau_lift = (m + 1,) + tuple(v + 1 if v in sset else v for v in tau)
    out = theta_des(tau_lift, pi, sigma_lift, 2, sigma_lift_new)
    assert out[0] == m + n + 1
    return out[1:]


# ---------------------------------------------------------------------------
# peak-side moves


def _pk_core(tau: Perm, a_src: Perm, a_tgt: Perm, j: int) -> Perm:
    """Rewrite one interleaving for the move of the interior peak of
    ``a_src`` at position j (1-based, >= 3) to j-1, realized by ``a_tgt``.

    Entries outside ``a_src`` pass through and must all exceed every
    ``a_src`` entry.  The factor of ``tau`` strictly between a_{j-2} and
    a_{j+1} splits as sa, a_{j-1}, sb, a_j, sc on the foreign entries;
    when exactly one outer foreign block is present it is carried across
    the two a-entries, otherwise only the a-entries are renamed in place.
    """
    s = tau.index(a_src[j - 3])
    t = tau.index(a_src[j])
    block = tau[s + 1 : t]
    i1 = block.index(a_src[j - 2])
    i2 = block.index(a_src[j - 1])
    sa, sb, sc = block[:i1], block[i1 + 1 : i2], block[i2 + 1 :]
    y_prev, y_peak = a_tgt[j - 2], a_tgt[j - 1]
    if sa and not sb and not sc:
        mid = (y_prev, y_peak) + sa
    elif sc and not sa and not sb:
        mid = sc + (y_prev, y_peak)
    else:
        mid = sa + (y_prev,) + sb + (y_peak,) + sc
    aset = set(a_src)
    rep = iter(a_tgt)
    out = [next(rep) if v in aset else v for v in tau[: s + 1]]
    next(rep)
    next(rep)
    out.extend(mid)
    out.extend(next(rep) if v in aset else v for v in tau[t:])
    return tuple(out)


def _pk_core_inv(tau: Perm, a_src: Perm, a_tgt: Perm, j: int) -> Perm:
    """Inverse of :func:`_pk_core`: recover the preimage of ``tau`` under
    the peak move j -> j-1 from ``a_src`` to ``a_tgt``.

    The branch is recognized from the foreign-block pattern of the image:
    (empty, empty, x) and (x, empty, empty) are the two carried cases,
    anything else was renamed in place.
    """
    s = tau.index(a_tgt[j - 3])
    t = tau.index(a_tgt[j])
    block = tau[s + 1 : t]
    i1 = block.index(a_tgt[j - 2])
    i2 = block.index(a_tgt[j - 1])
    ua, ub, uc = block[:i1], block[i1 + 1 : i2], block[i2 + 1 :]
    x_prev, x_peak = a_src[j - 2], a_src[j - 1]
    if uc and not ua and not ub:
        mid = uc + (x_prev, x_peak)
    elif ua and not ub and not uc:
        mid = (x_prev, x_peak) + ua
    else:
        mid = ua + (x_prev,) + ub + (x_peak,) + uc
    aset = set(a_tgt)
    rep = iter(a_src)
    out = [next(rep) if v in aset else v for v in tau[: s + 1]]
    next(rep)
    next(rep)
    out.extend(mid)
    out.extend(next(rep) if v in aset else v for v in tau[t:])
    return tuple(out)


def _anchored_move(tau: Perm, a_src: Perm, a_tgt: Perm, j: int, inverse: bool) -> Perm:
    """Peak move on framed sequences, lifting once when anchored at
    position 2 so the core always sees a peak at position >= 3."""
    if j == 2:
        out = _anchored_move(
            (0,) + tuple(v + 1 for v in tau),
            (0,) + tuple(v + 1 for v in a_src),
            (0,) + tuple(v + 1 for v in a_tgt),
            3,
            inverse,
        )
        assert out[0] == 0
        return tuple(v - 1 for v in out[1:])
    core = _pk_core_inv if inverse else _pk_core
    return core(tau, a_src, a_tgt, j)


def _validate_pk_move(pi: Perm, pi_new: Perm, j: int) -> None:
    if set(pi) != set(pi_new):
        raise ValueError("replacement permutation must share the domain")
    pk_src = peak_family(pi, "interior")
    if j < 3:
        raise ValueError(f"interior move needs position >= 3, got {j}")
    if j not in pk_src:
        raise ValueError(f"{j} is not a peak of {pi}")
    if j - 2 in pk_src:
        raise ValueError(f"peak at {j - 2} blocks moving the peak at {j}")
    want = (pk_src - {j}) | {j - 1}
    if peak_family(pi_new, "interior") != want:
        raise ValueError(
            f"replacement must have peak set {sorted(want)}, got {pi_new}"
        )


def theta_pk(tau: Perm, pi: Perm, pi_new: Perm, sigma: Perm, j: int) -> Perm:
    """Move the interior peak of ``pi`` at position j (>= 3) to j-1,
    rewriting ``tau``; the interleaving keeps its peak count."""
    _require_separated(pi, sigma)
    _validate_pk_move(pi, pi_new, j)
    _require_shuffle(tau, pi, sigma)
    return _pk_core(tau, pi, pi_new, j)


def theta_lpk(tau: Perm, pi: Perm, sigma: Perm, pi_new: Perm) -> Perm:
    """Move a left peak at position 2 of ``pi`` to position 1.

    Prepends a low sentinel to both sides of the move, turning the left
    peak into an interior peak at position 3, applies the interior move,
    and strips the sentinel.
    """
    _require_separated(pi, sigma)
    if set(pi) != set(pi_new):
        raise ValueError("replacement permutation must share the domain")
    if min(pi) <= 0:
        raise ValueError("pi must be positive so the sentinel 0 is fresh")
    lpk_src = peak_family(pi, "left")
    if 2 not in lpk_src:
        raise ValueError(f"{pi} has no left peak at position 2")
    want = (lpk_src - {2}) | {1}
    if peak_family(pi_new, "left") != want:
        raise ValueError(
            f"replacement must have left peak set {sorted(want)}, got {pi_new}"
        )
    _require_shuffle(tau, pi, sigma)
    out = _pk_core((0,) + tau, (0,) + pi, (0,) + pi_new, 3)
    assert out[0] == 0
    return out[1:]


def _rpk_move(tau: Perm, pi: Perm, pi_new: Perm, sigma: Perm, j: int) -> Perm:
    """Move the right peak of ``pi`` at j to j+1 in ``pi_new``: the inverse
    of an interior move on the appended-sentinel framing."""
    _require_separated(pi, sigma)
    _require_shuffle(tau, pi, sigma)
    out = _anchored_move(tau + (0,), pi_new + (0,), pi + (0,), j + 1, inverse=True)
    assert out[-1] == 0
    return out[:-1]


def _epk_final_move(tau: Perm, pi: Perm, pi_new: Perm, sigma: Perm) -> Perm:
    """Move an exterior peak at the last position one step left: a forward
    interior move on the appended-sentinel framing."""
    _require_separated(pi, sigma)
    _require_shuffle(tau, pi, sigma)
    out = _anchored_move(tau + (0,), pi + (0,), pi_new + (0,), len(pi), inverse=False)
    assert out[-1] == 0
    return out[:-1]


# ---------------------------------------------------------------------------
# canonical-form pipelines


def _measure(stat: StatId, pi: Perm, sigma: Perm) -> int:
    if stat in SIGMA_SIDE_STATS:
        return maj(sigma)
    m = len(pi)
    if stat == "pk":
        return sum(peak_family(pi, "interior"))
    if stat in ("lpk", "udr", ("udr", "pk")):
        return sum(peak_family(pi, "left"))
    if stat == "rpk":
        return sum(m - k for k in peak_family(pi, "right"))
    if stat == "epk":
        return sum(peak_family(pi, "exterior"))
    raise AssertionError(stat)


def _default_chi_plus(m: int, left_peaks: set[int]) -> int:
    return 0 if (m - 1) in left_peaks else 1


def _sigma_side_step(stat, sigma):
    """Next sigma-side rewrite, or None once canonical.

    Descent statistics stop at a leading run of descents; the major index
    pipeline continues until no descent is left.
    """
    dset = des_set(sigma)
    interior = sorted(i for i in dset if i >= 2 and i - 1 not in dset)
    if interior:
        i = interior[0]
        target = (dset - {i}) | {i - 1}
        return "theta_des", {"i": i}, perm_with_descent_set(sigma, target)
    if stat == "maj" and dset:
        return "theta_maj_first", {}, perm_with_descent_set(sigma, dset - {1})
    return None


def _pi_side_step(stat, pi):
    """Next pi-side rewrite, or None once canonical."""
    m = len(pi)
    pk = peak_family(pi, "interior")
    lpk = peak_family(pi, "left")

    if stat == "pk":
        movable = sorted(j for j in pk if j >= 3 and j - 2 not in pk)
        if not movable:
            return None
        j = movable[0]
        nxt = perm_with_descent_set(range(1, m + 1), (pk - {j}) | {j - 1})
        return "theta_pk", {"j": j}, nxt

    if stat in ("lpk", "udr"):
        movable = sorted(j for j in lpk if j >= 2 and j - 2 not in lpk)
        if not movable:
            return None
        j = movable[0]
        target = (lpk - {j}) | {j - 1}
        cp = chi_plus(pi) if stat == "udr" else _default_chi_plus(m, target)
        nxt = perm_with_left_peak_profile(m, target, cp)
        kind = "theta_lpk" if j == 2 else "theta_pk"
        return kind, {"j": j}, nxt

    if stat == ("udr", "pk"):
        movable = sorted(
            j for j in pk
            if j - 2 not in pk and (j >= 4 or (j == 3 and chi_minus(pi) == 0))
        )
        if not movable:
            return None
        j = movable[0]
        target = (lpk - {j}) | {j - 1}
        nxt = perm_with_left_peak_profile(m, target, chi_plus(pi))
        return "theta_pk", {"j": j}, nxt

    if stat == "rpk":
        rpk = peak_family(pi, "right")
        movable = sorted(
            (j for j in rpk if j <= m - 1 and j + 2 not in rpk), reverse=True
        )
        if not movable:
            return None
        j = movable[0]
        mirrored = {m + 1 - k for k in (rpk - {j}) | {j + 1}}
        rho = perm_with_left_peak_profile(m, mirrored, _default_chi_plus(m, mirrored))
        return "theta_rpk_inverse", {"j": j}, tuple(reversed(rho))

    if stat == "epk":
        epk = peak_family(pi, "exterior")
        movable = sorted(j for j in epk if j >= 2 and j - 2 not in epk)
        if not movable:
            return None
        j = movable[0]
        if j <= m - 1:
            target = (lpk - {j}) | {j - 1}
            nxt = perm_with_left_peak_profile(m, target, chi_plus(pi))
            kind = "theta_lpk" if j == 2 else "theta_pk"
            return kind, {"j": j}, nxt
        nxt = perm_with_left_peak_profile(m, lpk | {m - 1}, 0)
        return "theta_pk", {"j": j, "frame": "append"}, nxt

    raise AssertionError(stat)


def canonicalize(stat: StatId, side: str, pi: Perm, sigma: Perm):
    """Reduce one side of a separated pair to its canonical profile.

    Returns the canonical permutation for the rewritten side together with
    a trace whose replay (:func:`apply_trace`) is a bijection from the
    starting shuffle set onto the canonical one, preserving ``stat``
    pointwise; major-index components are instead lowered by exactly the
    number of descent-side steps.  The termination measure decreases
    strictly at every step.
    """
    stat = validate_stat(stat)
    if stat not in SUPPORTED_STATS:
        raise ValueError(f"no reduction pipeline for statistic {stat!r}")
    want_side = "sigma_side" if stat in SIGMA_SIDE_STATS else "pi_side"
    if side != want_side:
        raise ValueError(f"statistic {stat!r} reduces on {want_side}, not {side!r}")
    m, n = len(pi), len(sigma)
    if set(pi) != set(range(1, m + 1)) or set(sigma) != set(range(m + 1, m + n + 1)):
        raise ValueError(
            "operands must be normalized to [m] and [n]+m (see normalize_pair)"
        )

    steps = []
    cur_pi, cur_sg = pi, sigma
    start_measure = _measure(stat, pi, sigma)
    while True:
        if want_side == "sigma_side":
            found = _sigma_side_step(stat, cur_sg)
        else:
            found = _pi_side_step(stat, cur_pi)
        if found is None:
            break
        kind, params, nxt = found
        nxt_pi, nxt_sg = (cur_pi, nxt) if want_side == "sigma_side" else (nxt, cur_sg)
        steps.append(
            ReductionStep(
                kind, params, cur_pi, cur_sg, nxt_pi, nxt_sg,
                _measure(stat, nxt_pi, nxt_sg),
            )
        )
        cur_pi, cur_sg = nxt_pi, nxt_sg

    trace = ReductionTrace(
        statistic=stat,
        steps=tuple(steps),
        start_pi=pi,
        start_sigma=sigma,
        final_pi=cur_pi,
        final_sigma=cur_sg,
        start_measure=start_measure,
    )
    canonical = cur_sg if want_side == "sigma_side" else cur_pi
    return canonical, trace


def maj_decrement(trace: ReductionTrace) -> int:
    """Total drop in major index a replay applies to every interleaving."""
    return sum(1 for s in trace.steps if s.kind in ("theta_des", "theta_maj_first"))


def apply_step(step: ReductionStep, tau: Perm) -> Perm:
    """Replay one recorded rewrite on a single interleaving."""
    pi_s, sg_s = step.source_pi, step.source_sigma
    pi_t, sg_t = step.target_pi, step.target_sigma
    kind = step.kind
    if kind == "t_swap":
        return t_swap(tau, step.params["i"])
    if kind == "phi":
        return phi(tau, pi_s, pi_t, sg_s)
    if kind == "phi_tilde":
        return phi_tilde(tau, pi_s, sg_s, sg_t)
    if kind == "theta_des":
        return theta_des(tau, pi_s, sg_s, step.params["i"], sg_t)
    if kind == "theta_maj_first":
        return theta_maj_first(tau, pi_s, sg_s, sg_t)
    if kind == "theta_pk":
        if step.params.get("frame") == "append":
            return _epk_final_move(tau, pi_s, pi_t, sg_s)
        return theta_pk(tau, pi_s, pi_t, sg_s, step.params["j"])
    if kind == "theta_lpk":
        return theta_lpk(tau, pi_s, sg_s, pi_t)
    if kind == "theta_rpk_inverse":
        return _rpk_move(tau, pi_s, pi_t, sg_s, step.params["j"])
    raise AssertionError(kind)


def apply_trace(trace: ReductionTrace, tau: Perm) -> Perm:
    """Replay every step of a trace on one interleaving of its start pair."""
    if not is_shuffle(tau, trace.start_pi, trace.start_sigma):
        raise NotAShuffleError(
            f"{tau} is not in the shuffle set of "
            f"{trace.start_pi} and {trace.start_sigma}"
        )
    cur = tau
    for step in trace.steps:
        cur = apply_step(step, cur)
    return cur
