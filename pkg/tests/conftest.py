import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# small groups used by property tests
SMALL_SPECS = [
    "cyclic:1", "cyclic:2", "cyclic:5", "cyclic:6", "cyclic:8", "dihedral:3", "dihedral:4",
    "dihedral:5", "elementary:2:3", "elementary:3:2", "quaternion8", "alt4", "cyclic:2xcyclic:4",
    "c3_rtimes_c4",
]


@pytest.fixture(params=SMALL_SPECS)
def small_spec(request):
    return request.param
