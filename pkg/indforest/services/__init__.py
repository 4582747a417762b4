"""Service layer: the operations over graphs and embeddings."""
