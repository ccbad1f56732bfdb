"""
Batch experiments
"""
