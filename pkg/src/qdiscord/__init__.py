"""Concurrence and quantum discord of two qubits under local Markovian noise."""

from .channels import (
    DecayClock,
    KrausChannel,
    apply_two_qubit,
    compose,
    depolarizing,
    dephasing,
    gad,
    gamma_of,
    identity,
)
from .correlations import (
    CorrelationReport,
    MeasurementBasis,
    classical_correlation,
    concurrence,
    concurrence_general,
    concurrence_x,
    conditional_state,
    discord,
    discord_bell_diagonal,
    entropy,
    mutual_information,
    published_concurrence_dephasing_werner,
    published_discord_dephasing_werner,
)
from .experiments import ChannelConfig, ConfigKind, StateFamily, discord_positivity_scan, esd_gamma, evaluate, evolve, sweep
from .states import (
    BlochCorrelationForm,
    XState,
    from_bloch,
    partial_trace,
    phi_state,
    to_bloch,
    to_x_state,
    werner,
)

__version__ = "0.1.0"
