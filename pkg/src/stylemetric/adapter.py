"""Multi-user style adapter at toy scale, with hand-derived gradients.

The frozen decoder is a seeded stub (linear map + causal mixing + tanh);
the adapter, implicit style features and attribute embeddings are the
trainable variables. Shapes: H hidden size, V vocabulary size, G gate size,
m implicit feature vectors per user, n tokens per user sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields

import numpy as np

from .attributes import StyleAttribute

PARAM_NAMES = ("W_h", "b_h", "W_c", "b_c", "W_s", "b_s", "W_g", "b_g", "W_k", "b_k", "W_r", "b_r")
N_ATTRIBUTES = len(StyleAttribute)
MASS_TOL = 1e-12


class AdapterError(ValueError):
    pass


@dataclass
class AdapterParams:
    W_h: np.ndarray
    b_h: np.ndarray
    W_c: np.ndarray
    b_c: np.ndarray
    W_s: np.ndarray
    b_s: np.ndarray
    W_g: np.ndarray
    b_g: np.ndarray
    W_k: np.ndarray
    b_k: np.ndarray
    W_r: np.ndarray
    b_r: np.ndarray

    @property
    def dims(self) -> tuple[int, int, int]:
        """(H, V, G)."""
        return self.W_h.shape[0], self.W_s.shape[0], self.W_g.shape[0]

    def __post_init__(self):
        H, V, G = self.W_h.shape[0], self.W_s.shape[0], self.W_g.shape[0]
        want = {"W_h": (H, H), "b_h": (H,), "W_c": (H, H), "b_c": (H,), "W_s": (V, H), "b_s": (V,),
                "W_g": (G, V), "b_g": (G,), "W_k": (G, H), "b_k": (G,), "W_r": (V, G), "b_r": (V,)}
        for name, shape in want.items():
            a = getattr(self, name)
            if a.shape != shape:
                raise AdapterError(f"{name} has shape {a.shape}, expected {shape}")
            if not np.all(np.isfinite(a)):
                raise AdapterError(f"{name} has non-finite entries")

    @classmethod
    def init(cls, H: int, V: int, G: int | None = None, seed: int = 0, scale: float = 0.5) -> "AdapterParams":
        G = H if G is None else G
        rng = np.random.default_rng(seed)
        shapes = {"W_h": (H, H), "b_h": (H,), "W_c": (H, H), "b_c": (H,), "W_s": (V, H), "b_s": (V,),
                  "W_g": (G, V), "b_g": (G,), "W_k": (G, H), "b_k": (G,), "W_r": (V, G), "b_r": (V,)}
        return cls(**{k: rng.normal(0.0, scale, s) for k, s in shapes.items()})

    @classmethod
    def zeros(cls, H: int, V: int, G: int | None = None) -> "AdapterParams":
        p = cls.init(H, V, G, 0)
        for f in fields(cls):
            getattr(p, f.name)[...] = 0.0
        return p

    def as_dict(self) -> dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in PARAM_NAMES}


# ---------------------------------------------------------------------------
# frozen decoder stub


@dataclass
class ToyDecoder:
    """h = tanh(X Dᵀ + L X Cᵀ), L the causal running mean, logits_o = h W_oᵀ."""
    D: np.ndarray
    C: np.ndarray
    W_o: np.ndarray

    @classmethod
    def init(cls, H: int, V: int, seed: int = 0, scale: float = 0.5) -> "ToyDecoder":
        rng = np.random.default_rng([seed, 1])
        return cls(rng.normal(0, scale, (H, H)), rng.normal(0, scale, (H, H)), rng.normal(0, scale, (V, H)))

    @staticmethod
    def causal_mean(T: int) -> np.ndarray:
        L = np.tril(np.ones((T, T)))
        return L / L.sum(axis=1, keepdims=True)

    def pre_activation(self, X: np.ndarray) -> np.ndarray:
        if X.ndim != 2 or X.shape[1] != self.D.shape[0]:
            raise AdapterError(f"decoder input must be T×{self.D.shape[0]}, got {X.shape}")
        return X @ self.D.T + self.causal_mean(len(X)) @ X @ self.C.T

    def hidden(self, p_u: np.ndarray, e: np.ndarray) -> np.ndarray:
        if p_u.ndim != 2 or e.ndim != 2 or p_u.shape[1] != e.shape[1]:
            raise AdapterError(f"p_u {p_u.shape} and token embeddings {e.shape} disagree")
        return np.tanh(self.pre_activation(np.vstack([p_u, e])))

    def generic_distribution(self, h: np.ndarray) -> np.ndarray:
        return softmax(h @ self.W_o.T)


def toy_decoder(token_embeddings: np.ndarray, p_u: np.ndarray, seed: int = 0, V: int = 16,
                scale: float = 0.5) -> np.ndarray:
    """Hidden states for the sequence [p_u; e], shape (m+n)×H."""
    H = p_u.shape[1]
    return ToyDecoder.init(H, V, seed, scale).hidden(np.asarray(p_u, float), np.asarray(token_embeddings, float))


# ---------------------------------------------------------------------------
# adapter forward pieces (rows are time steps)


def softmax(z: np.ndarray) -> np.ndarray:
    z = z - np.max(z, axis=-1, keepdims=True)
    ez = np.exp(z)
    return ez / ez.sum(axis=-1, keepdims=True)


def sigmoid(z: np.ndarray) -> np.ndarray:
    return np.where(z >= 0, 1.0 / (1.0 + np.exp(-np.abs(z))), np.exp(-np.abs(z)) / (1.0 + np.exp(-np.abs(z))))


def style_hidden(params: AdapterParams, h: np.ndarray) -> np.ndarray:
    """s = W_c(W_h h + b_h) + b_c (two affine maps, no nonlinearity between)."""
    return (h @ params.W_h.T + params.b_h) @ params.W_c.T + params.b_c


def style_distribution(params: AdapterParams, s: np.ndarray) -> np.ndarray:
    return softmax(s @ params.W_s.T + params.b_s)


def gate(params: AdapterParams, P_s: np.ndarray, h: np.ndarray) -> np.ndarray:
    """g = σ(W_r(relu(W_g P_s + b_g) + W_k h + b_k) + b_r)."""
    s_prime = np.maximum(P_s @ params.W_g.T + params.b_g, 0.0)
    h_prime = h @ params.W_k.T + params.b_k
    return sigmoid((s_prime + h_prime) @ params.W_r.T + params.b_r)


def merge_distributions(g: np.ndarray, P_s: np.ndarray, P_o: np.ndarray, renormalize: bool = True) -> np.ndarray:
    g, P_s, P_o = (np.asarray(x, float) for x in (g, P_s, P_o))
    if not (g.shape == P_s.shape == P_o.shape):
        raise AdapterError(f"shape mismatch: g {g.shape}, P_s {P_s.shape}, P_o {P_o.shape}")
    raw = g * P_s + (1.0 - g) * P_o
    if not renormalize:
        return raw
    total = raw.sum(axis=-1, keepdims=True)
    if np.any(total <= 0):
        raise AdapterError("merged distribution has zero mass")
    # rows already summing to 1 are left untouched so the g ∈ {0, 1} limits stay exact
    return np.where(np.abs(total - 1.0) <= MASS_TOL, raw, raw / total)


def global_style_feature(p_u: np.ndarray, attribute_vectors: np.ndarray) -> np.ndarray:
    """p̂ = mean_i p_i + mean_i a_i."""
    attribute_vectors = np.asarray(attribute_vectors, float)
    if attribute_vectors.ndim != 2 or len(attribute_vectors) == 0:
        raise AdapterError("global style feature needs at least one attribute vector")
    return np.asarray(p_u, float).mean(axis=0) + attribute_vectors.mean(axis=0)


def global_style_hidden(s: np.ndarray) -> np.ndarray:
    s = np.asarray(s, float)
    if s.ndim != 2 or len(s) == 0:
        raise AdapterError("global style hidden state needs a non-empty sequence")
    return s.mean(axis=0)


def cosine_matrix(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    na = np.linalg.norm(A, axis=1)
    nb = np.linalg.norm(B, axis=1)
    if np.any(na == 0) or np.any(nb == 0):
        raise AdapterError("cosine similarity undefined for a zero-norm feature")
    return (A @ B.T) / np.outer(na, nb)


def _contrastive_weights(logits: np.ndarray, include_positive: bool) -> np.ndarray:
    K = len(logits)
    if include_positive:
        return softmax(logits)
    masked = np.where(np.eye(K, dtype=bool), -np.inf, logits)
    return softmax(masked)


def contrastive_from_corr(corr: np.ndarray, tau: float = 0.5, include_positive: bool = True) -> float:
    corr = np.asarray(corr, float)
    K = len(corr)
    if K < 2:
        raise AdapterError("contrastive loss needs at least two users")
    if tau <= 0:
        raise AdapterError("tau must be positive")
    logits = corr / tau
    if include_positive:
        denom = logits
    else:
        denom = np.where(np.eye(K, dtype=bool), -np.inf, logits)
    m = denom.max(axis=1, keepdims=True)
    lse = (m + np.log(np.exp(denom - m).sum(axis=1, keepdims=True)))[:, 0]
    return float(np.mean(lse - np.diag(logits)))


def contrastive_loss(anchors: np.ndarray, hidden: np.ndarray, tau: float = 0.5,
                     include_positive: bool = True) -> float:
    """Mean over users of −log softmax of cosine(p̂_u, ŝ_·)/τ at the matching user."""
    return contrastive_from_corr(cosine_matrix(np.asarray(anchors, float), np.asarray(hidden, float)),
                                 tau, include_positive)


def nll_loss(distributions, targets) -> float:
    """−Σ_t ln P_t[target_t]."""
    P = np.atleast_2d(np.asarray(distributions, float))
    targets = np.asarray(targets, int)
    if len(P) != len(targets):
        raise AdapterError("distributions and targets differ in length")
    if np.any(targets < 0) or np.any(targets >= P.shape[1]):
        raise AdapterError("target index out of range")
    return float(-np.sum(np.log(P[np.arange(len(P)), targets])))


def total_loss(l_imp: float, l_cl: float, alpha: float = 0.55) -> float:
    return l_imp + alpha * l_cl


# ---------------------------------------------------------------------------
# end-to-end problem with analytic gradients


@dataclass
class UserStyleState:
    user_id: str
    p_u: np.ndarray
    attributes: tuple[StyleAttribute, ...]

    def __post_init__(self):
        if self.p_u.ndim != 2 or len(self.p_u) < 1:
            raise AdapterError("p_u must be an m×H matrix with m ≥ 1")


@dataclass
class UserSequence:
    state: UserStyleState
    embeddings: np.ndarray   # n×H token embeddings (frozen)
    targets: np.ndarray      # n next-token indices


@dataclass
class AdapterProblem:
    params: AdapterParams
    decoder: ToyDecoder
    users: list[UserSequence]
    attribute_table: np.ndarray  # one H vector per StyleAttribute
    alpha: float = 0.55
    tau: float = 0.5
    include_positive: bool = True
    renormalize: bool = True

    def variables(self) -> dict[str, np.ndarray]:
        """Every trainable array, by name (arrays are live references)."""
        out = dict(self.params.as_dict())
        for k, u in enumerate(self.users):
            out[f"p_u[{k}]"] = u.state.p_u
        out["attributes"] = self.attribute_table
        return out


@dataclass
class StepTrace:
    h: np.ndarray
    s: np.ndarray
    P_s: np.ndarray
    z_g: np.ndarray
    s_prime: np.ndarray
    h_prime: np.ndarray
    g: np.ndarray
    P_o: np.ndarray
    raw: np.ndarray
    P: np.ndarray


@dataclass
class ForwardResult:
    loss: float
    l_imp: float
    l_cl: float
    traces: list[StepTrace] = field(default_factory=list)
    anchors: np.ndarray | None = None
    hidden: np.ndarray | None = None


def _attr_rows(state: UserStyleState) -> list[int]:
    order = list(StyleAttribute)
    return [order.index(a) for a in state.attributes]


def _user_forward(pb: AdapterProblem, u: UserSequence) -> StepTrace:
    p = pb.params
    h = pb.decoder.hidden(u.state.p_u, u.embeddings)
    s = style_hidden(p, h)
    P_s = style_distribution(p, s)
    z_g = P_s @ p.W_g.T + p.b_g
    s_prime = np.maximum(z_g, 0.0)
    h_prime = h @ p.W_k.T + p.b_k
    g = sigmoid((s_prime + h_prime) @ p.W_r.T + p.b_r)
    P_o = pb.decoder.generic_distribution(h)
    raw = g * P_s + (1.0 - g) * P_o
    P = raw / raw.sum(axis=1, keepdims=True) if pb.renormalize else raw
    return StepTrace(h, s, P_s, z_g, s_prime, h_prime, g, P_o, raw, P)


def forward(pb: AdapterProblem) -> ForwardResult:
    traces = [_user_forward(pb, u) for u in pb.users]
    l_imp = 0.0
    for u, tr in zip(pb.users, traces):
        m = len(u.state.p_u)
        l_imp += nll_loss(tr.P[m:], u.targets)
    l_imp /= len(pb.users)
    anchors = np.stack([global_style_feature(u.state.p_u, pb.attribute_table[_attr_rows(u.state)])
                        for u in pb.users])
    hidden = np.stack([global_style_hidden(tr.s) for tr in traces])
    l_cl = contrastive_loss(anchors, hidden, pb.tau, pb.include_positive)
    return ForwardResult(total_loss(l_imp, l_cl, pb.alpha), l_imp, l_cl, traces, anchors, hidden)


def loss(pb: AdapterProblem) -> float:
    return forward(pb).loss


def _softmax_back(P: np.ndarray, dP: np.ndarray) -> np.ndarray:
    return P * (dP - np.sum(dP * P, axis=-1, keepdims=True))


def gradients(pb: AdapterProblem) -> tuple[float, dict[str, np.ndarray]]:
    """Loss and its analytic gradient with respect to every trainable array."""
    fr = forward(pb)
    p = pb.params
    U = len(pb.users)
    grads = {k: np.zeros_like(v) for k, v in pb.variables().items()}

    # contrastive part: d/d(anchors), d/d(hidden)
    A, S = fr.anchors, fr.hidden
    na, ns = np.linalg.norm(A, axis=1), np.linalg.norm(S, axis=1)
    corr = (A @ S.T) / np.outer(na, ns)
    w = _contrastive_weights(corr / pb.tau, pb.include_positive)
    d_logits = (w - np.eye(U)) / U * pb.alpha
    d_corr = d_logits / pb.tau
    # ∂corr_ij/∂a_i = s_j/(|a_i||s_j|) − corr_ij a_i/|a_i|²
    dA = (d_corr @ (S / ns[:, None])) / na[:, None] - (d_corr * corr).sum(axis=1)[:, None] * A / (na ** 2)[:, None]
    dS = (d_corr.T @ (A / na[:, None])) / ns[:, None] - (d_corr * corr).sum(axis=0)[:, None] * S / (ns ** 2)[:, None]

    for k, (u, tr) in enumerate(zip(pb.users, fr.traces)):
        m = len(u.state.p_u)
        T = len(tr.h)
        rows = _attr_rows(u.state)
        grads[f"p_u[{k}]"] += dA[k] / m
        for r in rows:
            grads["attributes"][r] += dA[k] / len(rows)

        # generation loss at token positions m..T-1, scaled by 1/U
        d_raw = np.zeros_like(tr.raw)
        t_idx = np.arange(m, T)
        y = u.targets
        d_raw[t_idx, y] -= 1.0 / tr.raw[t_idx, y]
        if pb.renormalize:
            d_raw[t_idx] += 1.0 / tr.raw[t_idx].sum(axis=1, keepdims=True)
        d_raw /= U

        d_g = d_raw * (tr.P_s - tr.P_o)
        d_Ps = d_raw * tr.g
        d_Po = d_raw * (1.0 - tr.g)

        d_zr = d_g * tr.g * (1.0 - tr.g)
        grads["W_r"] += d_zr.T @ (tr.s_prime + tr.h_prime)
        grads["b_r"] += d_zr.sum(axis=0)
        d_sum = d_zr @ p.W_r
        grads["W_k"] += d_sum.T @ tr.h
        grads["b_k"] += d_sum.sum(axis=0)
        d_h = d_sum @ p.W_k
        d_zg = d_sum * (tr.z_g > 0)
        grads["W_g"] += d_zg.T @ tr.P_s
        grads["b_g"] += d_zg.sum(axis=0)
        d_Ps += d_zg @ p.W_g

        d_ls = _softmax_back(tr.P_s, d_Ps)
        grads["W_s"] += d_ls.T @ tr.s
        grads["b_s"] += d_ls.sum(axis=0)
        d_s = d_ls @ p.W_s + dS[k] / T

        u1 = tr.h @ p.W_h.T + p.b_h
        grads["W_c"] += d_s.T @ u1
        grads["b_c"] += d_s.sum(axis=0)
        d_u1 = d_s @ p.W_c
        grads["W_h"] += d_u1.T @ tr.h
        grads["b_h"] += d_u1.sum(axis=0)
        d_h += d_u1 @ p.W_h

        d_h += _softmax_back(tr.P_o, d_Po) @ pb.decoder.W_o
        d_Z = d_h * (1.0 - tr.h ** 2)
        L = ToyDecoder.causal_mean(T)
        d_X = d_Z @ pb.decoder.D + L.T @ d_Z @ pb.decoder.C
        grads[f"p_u[{k}]"] += d_X[:m]
    return fr.loss, grads


def make_problem(H: int = 8, V: int = 16, m: int = 5, users: int = 3, n: int = 6, seed: int = 0,
                 G: int | None = None, alpha: float = 0.55, tau: float = 0.5,
                 include_positive: bool = True, renormalize: bool = True) -> AdapterProblem:
    """Random toy problem: seeded parameters, user features, attribute sets and targets."""
    rng = np.random.default_rng(seed)
    params = AdapterParams.init(H, V, G, seed=int(rng.integers(2 ** 31)))
    decoder = ToyDecoder.init(H, V, seed=int(rng.integers(2 ** 31)))
    table = rng.normal(0.0, 0.5, (N_ATTRIBUTES, H))
    attrs = list(StyleAttribute)
    seqs = []
    for k in range(users):
        chosen = rng.choice(len(attrs), size=int(rng.integers(1, 6)), replace=False)
        state = UserStyleState(f"user{k}", rng.normal(0.0, 0.5, (m, H)),
                               tuple(attrs[i] for i in sorted(chosen)))
        seqs.append(UserSequence(state, rng.normal(0.0, 0.5, (n, H)), rng.integers(0, V, n)))
    return AdapterProblem(params, decoder, seqs, table, alpha, tau, include_positive, renormalize)


@dataclass
class GradCheckResult:
    max_rel_error: float
    worst: str
    checked: int
    nudged: bool


def nudge_relu_kinks(pb: AdapterProblem, margin: float = 1e-3, max_rounds: int = 50) -> bool:
    """Shift b_g away from any gate pre-activation within `margin` of zero; True if anything moved."""
    moved = False
    for _ in range(max_rounds):
        close = np.zeros(pb.params.b_g.shape, bool)
        for tr in forward(pb).traces:
            close |= np.any(np.abs(tr.z_g) < margin, axis=0)
        if not close.any():
            return moved
        pb.params.b_g[close] += 3 * margin
        moved = True
    return moved


def finite_difference(f, x: np.ndarray, idx, step: float) -> float:
    old = x[idx]
    x[idx] = old + step
    up = f()
    x[idx] = old - step
    down = f()
    x[idx] = old
    if not (np.isfinite(up) and np.isfinite(down)):
        raise AdapterError("non-finite loss during finite differencing")
    return (up - down) / (2 * step)


def grad_check(pb: AdapterProblem, step: float = 1e-5, margin: float = 1e-3) -> GradCheckResult:
    """Max |analytic − central difference| / max(1, |central difference|) over every variable entry."""
    nudged = nudge_relu_kinks(pb, margin)
    value, grads = gradients(pb)
    if not np.isfinite(value):
        raise AdapterError("non-finite loss")
    f = lambda: loss(pb)
    worst, where, count = 0.0, "", 0
    for name, x in pb.variables().items():
        for idx in np.ndindex(x.shape):
            num = finite_difference(f, x, idx, step)
            err = abs(grads[name][idx] - num) / max(1.0, abs(num))
            count += 1
            if err > worst:
                worst, where = err, f"{name}{list(idx)}"
    return GradCheckResult(worst, where, count, nudged)


def quadratic_grad_check(dim: int = 6, seed: int = 0, step: float = 1e-5) -> float:
    """Sanity check of the finite-difference machinery on f(x) = ½xᵀQx + bᵀx."""
    rng = np.random.default_rng(seed)
    M = rng.normal(size=(dim, dim))
    Q = M @ M.T
    b = rng.normal(size=dim)
    x = rng.normal(size=dim)
    f = lambda: float(0.5 * x @ Q @ x + b @ x)
    analytic = Q @ x + b
    return max(abs(analytic[i] - finite_difference(f, x, (i,), step)) / max(1.0, abs(analytic[i]))
               for i in range(dim))


def demo_trace(pb: AdapterProblem, user: int = 0) -> dict:
    """Per-step P_s, g and merged P for one user's token positions."""
    fr = forward(pb)
    tr = fr.traces[user]
    m = len(pb.users[user].state.p_u)
    steps = []
    for t in range(m, len(tr.h)):
        steps.append({"step": t - m, "target": int(pb.users[user].targets[t - m]),
                      "P_s": tr.P_s[t].tolist(), "g": tr.g[t].tolist(), "P": tr.P[t].tolist()})
    return {"user_id": pb.users[user].state.user_id, "loss": fr.loss, "l_imp": fr.l_imp,
            "l_cl": fr.l_cl, "steps": steps}
