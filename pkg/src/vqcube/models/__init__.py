"""Domain entities: graphs and automorphisms."""
