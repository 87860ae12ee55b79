"""Réordonnancement monotone et forme normale de décalage des bijections de Z."""
