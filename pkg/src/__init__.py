# Bilateral Index Transform toolkit
# Eigenfunctions, the index transform and its identity suites
