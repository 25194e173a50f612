"""Laminar convective heat transfer toolkit.

Closed-form boundary-function solutions for the uniform-wall-temperature and
heat-exchange boundaries, the classical plate Graetz series, and an
independent finite-difference reference solver. All quantities SI.
"""

from graetzkit._graetzkit import (  # noqa: F401
    AdvectionScheme,
    Asymptote,
    BCMismatchError,
    BoundaryProfiles,
    DegenerateRootsError,
    DimensionlessGroups,
    ExchangeSolution,
    FdmConfig,
    FdmSolution,
    FluidProperties,
    Geometry,
    InvalidRegimeError,
    NonConvergenceError,
    ProblemSpec,
    RootStructureError,
    WallSolutionO4,
    WallSolutionO6,
    __version__,
    asymptote,
    beta1_exchange,
    beta1_wall_order4,
    default_config,
    dimensionless,
    extract_boundary_functions,
    fdm_solve,
    sample_profile,
    solve_exchange_order4,
    solve_quartic_wall_order6,
    solve_wall_order4,
    solve_wall_order6,
    theta_series,
    thermal_diffusivity,
    validate,
    velocity,
)


def problem(
    d=0,
    a=1.0,
    fluid=(1.0, 1.0, 1.0, 0.0),
    ti=1.0,
    tw=None,
    h=None,
    tinf=0.0,
    pe=None,
    u0=None,
):
    """Assemble a ProblemSpec the way the command-line tool does.

    Exactly one of ``pe`` / ``u0`` sets the flow speed (``pe`` derives u0 from
    the fluid); ``tw`` selects a uniform-temperature wall, ``h``/``tinf`` a
    heat-exchange wall.
    """
    if (pe is None) == (u0 is None):
        raise ValueError("give exactly one of pe or u0")
    if tw is not None and h is not None:
        raise ValueError("choose one wall boundary: tw or h/tinf")

    spec = ProblemSpec()
    spec.geometry = Geometry.circular_tube if d == 1 else Geometry.parallel_plates
    spec.a = a
    spec.fluid = FluidProperties(*fluid)
    spec.t_inlet = ti
    spec.u0 = u0 if u0 is not None else pe * thermal_diffusivity(spec.fluid) / a
    if h is not None:
        spec.set_exchange(h, tinf)
    else:
        spec.set_uniform_wall(0.0 if tw is None else tw)
    validate(spec)
    return spec
