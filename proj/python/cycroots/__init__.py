"""Eventually nonnegative p-th roots of imprimitive nonnegative matrices."""

from ._cycroots import (
    CyclicJordanForm,
    DomainError,
    Error,
    InputError,
    NumericalError,
    PreconditionError,
    ShapeError,
    SingularityError,
    SizeError,
    StructureError,
    completely_reducible_criterion,
    count_enn_primary_roots,
    cyclic_partition,
    eigendecompose,
    enn_root_exists,
    enumerate_enn_roots,
    from_jordan_pair,
    index_of_imprimitivity,
    perron_projection,
    power_verdict,
    primary_roots,
    run_cli,
    stochastic_principal_root_check,
    unique_branch_tuple,
)

__all__ = [name for name in dir() if not name.startswith("_")]
