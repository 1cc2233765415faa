from .builder import SatelliteSpec, companion_grid, satellite_seifert, cable_spec, cable_seifert

__all__ = [
    "SatelliteSpec",
    "companion_grid",
    "satellite_seifert",
    "cable_spec",
    "cable_seifert",
]
