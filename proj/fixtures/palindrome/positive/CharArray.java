public class CharArray {
    static boolean palindrome(String word) {
        char[] chars = word.toCharArray();
        int lo = 0;
        int hi = chars.length - 1;
        while (lo < hi) {
            if (chars[lo] != chars[hi]) {
                return false;
            }
            lo++;
            hi--;
        }
        return true;
    }
}
