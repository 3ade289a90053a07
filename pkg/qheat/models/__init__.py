from .two_qubit import (eigensystem, channel_table, density_matrix_uncoupled, gibbs_populations,
                        ground_state_label, product_basis_hamiltonian, eigenbasis_vectors, coupling_operators)
from .baths import occupation, rate_pair
