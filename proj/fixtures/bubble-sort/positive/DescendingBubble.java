public class DescendingBubble {
    public static void sortDescending(int[] values) {
        int passes = 0;
        for (int i = 0; i < values.length; i++) {
            passes++;
            for (int j = 1; j < values.length - i; j++) {
                if (values[j - 1] < values[j]) {
                    int held = values[j - 1];
                    values[j - 1] = values[j];
                    values[j] = held;
                }
            }
        }
        System.out.println("passes: " + passes);
    }
}
