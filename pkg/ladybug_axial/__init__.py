# coding=utf-8
"""Ladybug axial curvature lines of surfaces mapped into 4-space."""
