# Permutations, origamis and the SL(2,Z) words acting on them
