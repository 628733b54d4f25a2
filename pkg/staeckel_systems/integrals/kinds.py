"""Tags naming every integral of motion and algebra generator in the catalog."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class KindTag(Enum):
    ANGULAR_LEFT = "angular-left"        # S^(m), indices 1..m
    ANGULAR_RIGHT = "angular-right"      # S_(m), indices N-m+1..N
    TOTAL_L2 = "total-l2"
    FRADKIN_SEED = "fradkin-seed"        # p_i p_j
    LRL_SEED = "lrl-seed"                # Σ_k p_k (q_k p_i − q_i p_k)
    FLAT_FRADKIN = "flat-fradkin"
    FLAT_LRL = "flat-lrl"
    CURVED_FRADKIN = "curved-fradkin"
    CURVED_LRL = "curved-lrl"
    SO_GENERATOR = "so-generator"        # J_ij = q_i p_j − q_j p_i
    SL2_MINUS = "sl2-minus"              # q²
    SL2_PLUS = "sl2-plus"                # p²
    SL2_THREE = "sl2-three"              # q·p
    HAMILTONIAN = "hamiltonian"


@dataclass(frozen=True)
class ObservableKind:
    """A catalog tag plus its 1-based indices (m for angular kinds)."""
    tag: KindTag
    indices: tuple[int, ...] = ()

    @classmethod
    def angular_left(cls, m: int) -> ObservableKind:
        return cls(KindTag.ANGULAR_LEFT, (m,))

    @classmethod
    def angular_right(cls, m: int) -> ObservableKind:
        return cls(KindTag.ANGULAR_RIGHT, (m,))

    @classmethod
    def total_l2(cls) -> ObservableKind:
        return cls(KindTag.TOTAL_L2)

    @classmethod
    def fradkin_seed(cls, i: int, j: int) -> ObservableKind:
        return cls(KindTag.FRADKIN_SEED, (i, j))

    @classmethod
    def lrl_seed(cls, i: int) -> ObservableKind:
        return cls(KindTag.LRL_SEED, (i,))

    @classmethod
    def flat_fradkin(cls, i: int, j: int) -> ObservableKind:
        return cls(KindTag.FLAT_FRADKIN, (i, j))

    @classmethod
    def flat_lrl(cls, i: int) -> ObservableKind:
        return cls(KindTag.FLAT_LRL, (i,))

    @classmethod
    def curved_fradkin(cls, i: int, j: int) -> ObservableKind:
        return cls(KindTag.CURVED_FRADKIN, (i, j))

    @classmethod
    def curved_lrl(cls, i: int) -> ObservableKind:
        return cls(KindTag.CURVED_LRL, (i,))

    @classmethod
    def so_generator(cls, i: int, j: int) -> ObservableKind:
        return cls(KindTag.SO_GENERATOR, (i, j))

    @classmethod
    def sl2_minus(cls) -> ObservableKind:
        return cls(KindTag.SL2_MINUS)

    @classmethod
    def sl2_plus(cls) -> ObservableKind:
        return cls(KindTag.SL2_PLUS)

    @classmethod
    def sl2_three(cls) -> ObservableKind:
        return cls(KindTag.SL2_THREE)

    @classmethod
    def hamiltonian(cls) -> ObservableKind:
        return cls(KindTag.HAMILTONIAN)

    def label(self, dim: int) -> str:
        """Report label; S^(N) and S_(N) are both reported as L2."""
        t, ix = self.tag, self.indices
        if t in (KindTag.ANGULAR_LEFT, KindTag.ANGULAR_RIGHT) and ix[0] == dim:
            return "L2"
        return _LABELS[t].format(*ix)


_LABELS: dict[KindTag, str] = {
    KindTag.ANGULAR_LEFT: "S^({})",
    KindTag.ANGULAR_RIGHT: "S_({})",
    KindTag.TOTAL_L2: "L2",
    KindTag.FRADKIN_SEED: "S_{}_{}",
    KindTag.LRL_SEED: "S_{}",
    KindTag.FLAT_FRADKIN: "SU_{}_{}",
    KindTag.FLAT_LRL: "SU_{}",
    KindTag.CURVED_FRADKIN: "St_{}_{}",
    KindTag.CURVED_LRL: "St_{}",
    KindTag.SO_GENERATOR: "J_{}_{}",
    KindTag.SL2_MINUS: "J-",
    KindTag.SL2_PLUS: "J+",
    KindTag.SL2_THREE: "J3",
    KindTag.HAMILTONIAN: "H",
}
