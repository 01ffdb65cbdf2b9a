"""Domain models: polynomials, trees, reports"""
