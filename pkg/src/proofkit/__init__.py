"""Proof objects for until-free propositional LTL: sequent calculi, natural deduction and the translations between them."""
