from .terrain import TerrainCell, TerrainMap
from .vehicle import Control, LatencyQueue, VehicleState, effective_control, step_dynamics
from .sensors import InertialSample, OdomSample, synthesize_imu, synthesize_odometry
from .camera import render_camera
from .worlds import builtin_world, load_world, save_world

__all__ = [
    "TerrainCell",
    "TerrainMap",
    "Control",
    "LatencyQueue",
    "VehicleState",
    "effective_control",
    "step_dynamics",
    "InertialSample",
    "OdomSample",
    "synthesize_imu",
    "synthesize_odometry",
    "render_camera",
    "builtin_world",
    "load_world",
    "save_world",
]
