"""Service layer for the HOHF aggregation and consensus pipeline."""
