"""Partial (co)actions of Taft and Nichols Hopf algebras, verified exactly."""
