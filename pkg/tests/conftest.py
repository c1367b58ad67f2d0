import os
import sys

from hypothesis import HealthCheck, settings

# Make the suite runnable from a plain checkout.
sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")
