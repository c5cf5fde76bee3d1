# Tests for transversal-class
