"""tenperm: dense tensor algebra built around permutations of tensor modes.

The library generalizes the matrix transpose to tensors of any order via
permutations of the mode set, and supplies the operations whose behavior
under such transposes is worth knowing: n-mode products, inner products and
norms, l^p eigenpairs of cubical tensors, and the Kruskal (CP) and Tucker
factored forms with their permutation transforms.
"""

from .decomp import (
    KruskalTensor,
    TuckerTensor,
    cp_als,
    hosvd,
    kruskal_reconstruct,
    kruskal_transpose,
    mode_unfold,
    tucker_reconstruct,
    tucker_transpose,
)
from .dense import (
    NAMED_TRANSPOSES,
    TransposeKind,
    build,
    element_at,
    enumerate_transposes,
    is_supersymmetric,
    named_transpose3,
    transpose,
    transpose_kind,
)
from .eigen import (
    EigenPair,
    SolverConfig,
    phi,
    phi_inverse,
    residual,
    solve_power_iteration,
)
from .errors import FormatError, NoConvergenceError, SingularSystemError
from .formats import (
    format_float,
    parse_any,
    parse_kruskal,
    parse_tensor,
    parse_tucker,
    serialize_kruskal,
    serialize_tensor,
    serialize_tucker,
)
from .linalg import gram, jacobi_eigh, matmul, solve_spd
from .multilinear import (
    frobenius_norm,
    homogeneous_value,
    inner_product,
    multilinear_map,
    nmode_product,
    outer_product,
)
from .perm import (
    Permutation,
    compose,
    derangement_count,
    enumerate_permutations,
    identity,
)

__version__ = "0.1.0"

__all__ = [
    "Permutation",
    "compose",
    "identity",
    "enumerate_permutations",
    "derangement_count",
    "TransposeKind",
    "NAMED_TRANSPOSES",
    "build",
    "element_at",
    "transpose",
    "named_transpose3",
    "transpose_kind",
    "is_supersymmetric",
    "enumerate_transposes",
    "nmode_product",
    "outer_product",
    "inner_product",
    "frobenius_norm",
    "homogeneous_value",
    "multilinear_map",
    "EigenPair",
    "SolverConfig",
    "phi",
    "phi_inverse",
    "residual",
    "solve_power_iteration",
    "matmul",
    "gram",
    "jacobi_eigh",
    "solve_spd",
    "KruskalTensor",
    "TuckerTensor",
    "kruskal_reconstruct",
    "kruskal_transpose",
    "tucker_reconstruct",
    "tucker_transpose",
    "mode_unfold",
    "hosvd",
    "cp_als",
    "parse_tensor",
    "serialize_tensor",
    "parse_kruskal",
    "serialize_kruskal",
    "parse_tucker",
    "serialize_tucker",
    "parse_any",
    "format_float",
    "FormatError",
    "NoConvergenceError",
    "SingularSystemError",
    "__version__",
]
