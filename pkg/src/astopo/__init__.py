"""Finite "desk scale" topology over generating sequences of tolerance relations.

Modules: ``core`` (continua and validation), ``figures`` (closure,
interior, separability), ``graded`` (monotone class families),
``connectivity`` (motions, components, nets), ``real`` (exact dyadic real
grid), ``metric`` (balls and metric continua), ``morphism`` (continuity of
functions), ``spec_io`` (space files) and ``cli``.
"""
__version__ = "0.1.0"
