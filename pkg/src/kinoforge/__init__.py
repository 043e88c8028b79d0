"""Desk-scale workbench for learned inverse-kinodynamic vehicle control.

Subpackages:
    sim        terrain maps, vehicle dynamics, latency queue, synthetic sensors
    geometry   ground-plane homography, bird's-eye-view warp, patch extraction
    nn         minimal differentiable network toolkit (dense/conv/skip, Adam)
    ikd        inverse-kinodynamic controllers and their training loop
    datagen    demonstration collection and training-sample construction
    evaluation closed-loop tracking runs, Hausdorff scoring, reports
"""

__version__ = "0.1.0"
