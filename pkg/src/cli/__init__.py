"""
Command-line front end
"""

from .main import RunManifest, build_parser, main

__all__ = ['RunManifest', 'build_parser', 'main']
