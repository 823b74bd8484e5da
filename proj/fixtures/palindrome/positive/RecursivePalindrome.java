public class RecursivePalindrome {
    public boolean isPal(String s, int lo, int hi) {
        if (lo >= hi) {
            return true;
        }
        if (s.charAt(lo) != s.charAt(hi)) {
            return false;
        }
        return isPal(s, lo + 1, hi - 1);
    }
}
