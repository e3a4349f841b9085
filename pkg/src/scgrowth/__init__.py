"""Small cancellation, hyperbolic geometry on finite balls and growth estimates."""

from .cayley import DEHN, FREE, OUT_OF_RANGE, FreeCertificate, GroupBall, distance, enumerate_ball, growth_rate_bounds
from .constants import constants_pipeline, growth_transfer, pingpong_constants
from .freesets import build_pingpong_set, check_reduced, classes_mod_elementary, pingpong_b0
from .hypgeom import energy_profile, estimate_delta, fellow_travelling_delta, gromov_product, translation_lengths
from .shortening import (
    build_moving_family,
    check_sc_condition,
    enumerate_shortening_free,
    find_minimal_shortenings,
    is_shortening_word,
    orbit_family,
    verify_counting_bound,
)
from .smallcancel import check_small_cancellation, dehn_reduce, greendlinger_witness, words_equal
from .words import Presentation, make_presentation, parse_presentation

__version__ = "0.1.0"
